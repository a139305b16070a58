#include <gtest/gtest.h>

#include "momo/random.hpp"
#include "momo/variation.hpp"

using namespace momo;

namespace {
const Bounds kUnit{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
}

TEST(Sbx, GatedOffCopiesParents) {
    RandomStream r(1);
    const DecisionVector p1{0.1, 0.2, 0.3}, p2{0.9, 0.8, 0.7};
    for (int i = 0; i < 100; ++i) {
        const auto [c1, c2] = sbx_crossover(p1, p2, 0.0, 20.0, kUnit, r);
        ASSERT_EQ(c1, p1);
        ASSERT_EQ(c2, p2);
    }
}

TEST(Sbx, EqualParentsGiveEqualChildren) {
    RandomStream r(2);
    const DecisionVector p{0.4, 0.5, 0.6};
    for (int i = 0; i < 100; ++i) {
        const auto [c1, c2] = sbx_crossover(p, p, 1.0, 20.0, kUnit, r);
        ASSERT_EQ(c1, p);
        ASSERT_EQ(c2, p);
    }
}

TEST(Sbx, SymmetricAroundParentMidpoint) {
    RandomStream r(3);
    const Bounds wide{{-100.0}, {100.0}};
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto [c1, c2] = sbx_crossover({0.2}, {0.8}, 1.0, 20.0, wide, r);
        sum += (c1[0] + c2[0]) / 2.0;
    }
    const double mean = sum / n;
    EXPECT_GE(mean, 0.49);
    EXPECT_LE(mean, 0.51);
}

TEST(Sbx, ChildrenStayInBounds) {
    RandomStream r(4);
    const Bounds b{{-1.0, 0.0}, {1.0, 1e-3}};
    for (int i = 0; i < 20000; ++i) {
        const DecisionVector p1{r.uniform(-1.0, 1.0), 0.0};
        const DecisionVector p2{r.uniform() < 0.1 ? 1.0 : r.uniform(-1.0, 1.0), 1e-3};
        const auto [c1, c2] = sbx_crossover(p1, p2, 1.0, 0.5, b, r);
        ASSERT_TRUE(b.contains(c1));
        ASSERT_TRUE(b.contains(c2));
    }
}

TEST(Sbx, PerVariableGateLeavesAboutHalfUnchanged) {
    RandomStream r(5);
    const std::size_t d = 20;
    const Bounds b{DecisionVector(d, 0.0), DecisionVector(d, 1.0)};
    const DecisionVector p1(d, 0.25), p2(d, 0.75);
    std::size_t untouched = 0, total = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto [c1, c2] = sbx_crossover(p1, p2, 1.0, 20.0, b, r);
        for (std::size_t j = 0; j < d; ++j) {
            untouched += (c1[j] == 0.25 && c2[j] == 0.75);
            ++total;
        }
    }
    EXPECT_NEAR(static_cast<double>(untouched) / total, 0.5, 0.02);
}

TEST(Sbx, RejectsLengthMismatch) {
    RandomStream r(6);
    EXPECT_THROW(sbx_crossover({0.1}, {0.1, 0.2}, 1.0, 20.0, kUnit, r), std::invalid_argument);
}

TEST(Sbx, DeterministicForSeed) {
    RandomStream a(9), b(9);
    const DecisionVector p1{0.1, 0.2, 0.3}, p2{0.9, 0.8, 0.7};
    EXPECT_EQ(sbx_crossover(p1, p2, 1.0, 20.0, kUnit, a), sbx_crossover(p1, p2, 1.0, 20.0, kUnit, b));
}

TEST(PolynomialMutation, GatedOffIsIdentity) {
    RandomStream r(1);
    const DecisionVector x{0.3, 0.6, 0.9};
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(polynomial_mutation(x, 0.0, 20.0, kUnit, r), x);
    }
}

TEST(PolynomialMutation, MeanAtCenter) {
    RandomStream r(2);
    const Bounds b{{0.0}, {1.0}};
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        sum += polynomial_mutation({0.5}, 1.0, 20.0, b, r)[0];
    }
    const double mean = sum / n;
    EXPECT_GE(mean, 0.49);
    EXPECT_LE(mean, 0.51);
}

TEST(PolynomialMutation, BoundCoordinatesStayInside) {
    RandomStream r(3);
    const Bounds b{{0.0, -2.0}, {1.0, 2.0}};
    for (int i = 0; i < 20000; ++i) {
        const auto y = polynomial_mutation({i % 2 ? 0.0 : 1.0, i % 3 ? -2.0 : 2.0}, 1.0, 1.0, b, r);
        ASSERT_TRUE(b.contains(y));
    }
}

TEST(PolynomialMutation, MutatesWithProbabilityPm) {
    RandomStream r(4);
    const std::size_t d = 10;
    const Bounds b{DecisionVector(d, 0.0), DecisionVector(d, 1.0)};
    std::size_t changed = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto y = polynomial_mutation(DecisionVector(d, 0.5), 0.1, 20.0, b, r);
        for (double v : y) {
            changed += v != 0.5;
        }
    }
    EXPECT_NEAR(static_cast<double>(changed) / (5000.0 * d), 0.1, 0.01);
}

TEST(Variation, IdentityPipelineWhenBothGatedOff) {
    RandomStream r(8);
    const DecisionVector p1{0.1, 0.5, 0.9}, p2{0.3, 0.2, 0.4};
    const auto [c1, c2] = sbx_crossover(p1, p2, 0.0, 20.0, kUnit, r);
    EXPECT_EQ(polynomial_mutation(c1, 0.0, 20.0, kUnit, r), p1);
}
