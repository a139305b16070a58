#include "momo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace momo {

namespace {

double mean_nearest_distance(std::span<const std::vector<double>> attained,
                             std::span<const std::vector<double>> reference) {
    if (attained.empty() || reference.empty()) {
        throw std::invalid_argument("distance indicator: empty point set");
    }
    const std::size_t dim = reference.front().size();
    for (const auto& a : attained) {
        if (a.size() != dim) {
            throw std::invalid_argument("distance indicator: dimension mismatch");
        }
    }
    double total = 0.0;
    for (const auto& r : reference) {
        if (r.size() != dim) {
            throw std::invalid_argument("distance indicator: dimension mismatch");
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : attained) {
            double s = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                const double d = a[i] - r[i];
                s += d * d;
            }
            best = std::min(best, s);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

}  // namespace

double igd(std::span<const ObjectiveVector> attained, std::span<const ObjectiveVector> reference) {
    return mean_nearest_distance(attained, reference);
}

double igdx(std::span<const DecisionVector> attained, std::span<const DecisionVector> reference_ps) {
    return mean_nearest_distance(attained, reference_ps);
}

double cover_rate(std::span<const DecisionVector> attained, std::span<const DecisionVector> reference_ps,
                  const Bounds& /*bounds*/) {
    if (attained.empty() || reference_ps.empty()) {
        throw std::invalid_argument("cover_rate: empty point set");
    }
    const std::size_t dim = reference_ps.front().size();
    double product = 1.0;
    for (std::size_t l = 0; l < dim; ++l) {
        double ref_lo = std::numeric_limits<double>::infinity();
        double ref_hi = -ref_lo;
        for (const auto& r : reference_ps) {
            ref_lo = std::min(ref_lo, r[l]);
            ref_hi = std::max(ref_hi, r[l]);
        }
        if (ref_hi == ref_lo) {
            continue;
        }
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& a : attained) {
            lo = std::min(lo, a[l]);
            hi = std::max(hi, a[l]);
        }
        if (lo >= ref_hi || hi <= ref_lo) {
            return 0.0;
        }
        const double ratio = (std::min(hi, ref_hi) - std::max(lo, ref_lo)) / (ref_hi - ref_lo);
        product *= ratio * ratio;
    }
    const double cr = std::pow(product, 1.0 / (2.0 * static_cast<double>(dim)));
    return std::clamp(cr, 0.0, 1.0);
}

double psp(std::span<const DecisionVector> attained, std::span<const DecisionVector> reference_ps,
           const Bounds& bounds) {
    const double cr = cover_rate(attained, reference_ps, bounds);
    if (cr == 0.0) {
        return 0.0;
    }
    return cr / std::max(igdx(attained, reference_ps), kPspFloor);
}

MetricsReport score(std::span<const ObjectiveVector> attained_f, std::span<const DecisionVector> attained_x,
                    std::span<const ObjectiveVector> reference_pf, std::span<const DecisionVector> reference_ps,
                    const Bounds& bounds) {
    MetricsReport r;
    r.igd = igd(attained_f, reference_pf);
    r.igdx = igdx(attained_x, reference_ps);
    r.cr = cover_rate(attained_x, reference_ps, bounds);
    r.psp_floor_hit = r.igdx < kPspFloor;
    r.psp = r.cr == 0.0 ? 0.0 : r.cr / std::max(r.igdx, kPspFloor);
    return r;
}

}  // namespace momo
