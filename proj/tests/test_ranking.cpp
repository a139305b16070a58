#include <gtest/gtest.h>

#include "momo/random.hpp"
#include "momo/ranking.hpp"
#include "oracles.hpp"

using namespace momo;

TEST(Dominates, Examples) {
    EXPECT_TRUE(dominates(std::vector<double>{0, 1}, std::vector<double>{1, 1}));
    EXPECT_FALSE(dominates(std::vector<double>{0, 1}, std::vector<double>{1, 0}));
    EXPECT_FALSE(dominates(std::vector<double>{1, 1}, std::vector<double>{1, 1}));
    EXPECT_THROW(dominates(std::vector<double>{1}, std::vector<double>{1, 1}), std::invalid_argument);
}

TEST(NonDominatedSort, SinglePoint) {
    const std::vector<ObjectiveVector> pts{{3.0, 4.0}};
    EXPECT_EQ(non_dominated_sort(pts).ranks, (std::vector<std::size_t>{0}));
}

TEST(NonDominatedSort, HandExample) {
    const std::vector<ObjectiveVector> pts{{0, 1}, {1, 0}, {1, 1}};
    const auto r = non_dominated_sort(pts);
    EXPECT_EQ(r.ranks, (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_EQ(r.front_count(), 2u);
    EXPECT_EQ(r.fronts(), (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
}

TEST(NonDominatedSort, DuplicatesShareRank) {
    const std::vector<ObjectiveVector> pts{{1, 1}, {1, 1}, {2, 2}};
    EXPECT_EQ(non_dominated_sort(pts).ranks, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(NonDominatedSort, RejectsBadInput) {
    EXPECT_THROW(non_dominated_sort(std::vector<ObjectiveVector>{}), std::invalid_argument);
    EXPECT_THROW(non_dominated_sort(std::vector<ObjectiveVector>{{1, 2}, {1}}), std::invalid_argument);
}

TEST(NonDominatedSort, MatchesPeelingOracle) {
    RandomStream r(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + r.uniform_index(40);
        const std::size_t m = 2 + r.uniform_index(3);
        std::vector<ObjectiveVector> pts(n, ObjectiveVector(m));
        for (auto& p : pts) {
            for (auto& v : p) {
                // Coarse grid so ties and duplicates occur.
                v = trial % 2 ? static_cast<double>(r.uniform_index(5)) : r.uniform();
            }
        }
        ASSERT_EQ(non_dominated_sort(pts).ranks, oracle::peel_ranks(pts)) << "trial " << trial;
    }
}
