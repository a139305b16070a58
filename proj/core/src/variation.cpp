#include "momo/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momo {

namespace {

constexpr double kSameValueEps = 1.0e-14;

double spread(double u, double beta, double eta_c) {
    const double alpha = 2.0 - std::pow(beta, -(eta_c + 1.0));
    if (u <= 1.0 / alpha) {
        return std::pow(u * alpha, 1.0 / (eta_c + 1.0));
    }
    return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0));
}

}  // namespace

std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                                        double pc, double eta_c, const Bounds& bounds,
                                                        RandomStream& rng) {
    if (p1.size() != p2.size() || p1.size() != bounds.size()) {
        throw std::invalid_argument("sbx_crossover: parent/bounds length mismatch");
    }
    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (rng.uniform() >= pc) {
        return {c1, c2};
    }
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (rng.uniform() >= 0.5) {
            continue;
        }
        if (std::fabs(p1[i] - p2[i]) <= kSameValueEps) {
            continue;
        }
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double y1 = std::min(p1[i], p2[i]);
        const double y2 = std::max(p1[i], p2[i]);
        const double u = rng.uniform();

        const double bq1 = spread(u, 1.0 + 2.0 * (y1 - lo) / (y2 - y1), eta_c);
        double v1 = 0.5 * ((y1 + y2) - bq1 * (y2 - y1));
        const double bq2 = spread(u, 1.0 + 2.0 * (hi - y2) / (y2 - y1), eta_c);
        double v2 = 0.5 * ((y1 + y2) + bq2 * (y2 - y1));
        v1 = std::clamp(v1, lo, hi);
        v2 = std::clamp(v2, lo, hi);

        if (rng.uniform() < 0.5) {
            std::swap(v1, v2);
        }
        c1[i] = v1;
        c2[i] = v2;
    }
    return {c1, c2};
}

DecisionVector polynomial_mutation(const DecisionVector& x, double pm, double eta_m, const Bounds& bounds,
                                   RandomStream& rng) {
    if (x.size() != bounds.size()) {
        throw std::invalid_argument("polynomial_mutation: vector/bounds length mismatch");
    }
    DecisionVector y = x;
    const double power = 1.0 / (eta_m + 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (rng.uniform() >= pm) {
            continue;
        }
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double width = hi - lo;
        const double v = std::clamp(y[i], lo, hi);
        const double d1 = (v - lo) / width;
        const double d2 = (hi - v) / width;
        const double u = rng.uniform();
        double dq = 0.0;
        if (u <= 0.5) {
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta_m + 1.0);
            dq = std::pow(val, power) - 1.0;
        } else {
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta_m + 1.0);
            dq = 1.0 - std::pow(val, power);
        }
        y[i] = std::clamp(v + dq * width, lo, hi);
    }
    return y;
}

}  // namespace momo
