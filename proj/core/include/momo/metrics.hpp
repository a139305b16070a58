#pragma once

#include <span>
#include <vector>

#include "momo/core.hpp"

namespace momo {

/// Denominator floor used by psp() when IGDX is zero or tiny.
inline constexpr double kPspFloor = 1.0e-12;

/// Mean over reference points of the Euclidean distance to the nearest
/// attained point.
double igd(std::span<const ObjectiveVector> attained, std::span<const ObjectiveVector> reference);

/// igd() in decision space.
double igdx(std::span<const DecisionVector> attained, std::span<const DecisionVector> reference_ps);

/// Bounding-box overlap between attained and reference sets:
/// CR = (prod_l delta_l)^(1/(2n)), delta_l the squared fraction of the
/// reference extent covered in dimension l. Dimensions with zero reference
/// extent are skipped (delta = 1).
double cover_rate(std::span<const DecisionVector> attained, std::span<const DecisionVector> reference_ps,
                  const Bounds& bounds);

/// cover_rate / max(igdx, kPspFloor).
double psp(std::span<const DecisionVector> attained, std::span<const DecisionVector> reference_ps,
           const Bounds& bounds);

struct MetricsReport {
    double igd = 0.0;
    double igdx = 0.0;
    double cr = 0.0;
    double psp = 0.0;
    bool psp_floor_hit = false;
};

MetricsReport score(std::span<const ObjectiveVector> attained_f, std::span<const DecisionVector> attained_x,
                    std::span<const ObjectiveVector> reference_pf, std::span<const DecisionVector> reference_ps,
                    const Bounds& bounds);

}  // namespace momo
