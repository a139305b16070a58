#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "momo/core.hpp"

namespace momo {

/// Pareto dominance for minimization, exact comparisons.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Fast non-dominated sorting. ranks[i] is the 0-based front index of point i.
struct RankAssignment {
    std::vector<std::size_t> ranks;

    std::size_t front_count() const;
    std::vector<std::vector<std::size_t>> fronts() const;
};

RankAssignment non_dominated_sort(std::span<const ObjectiveVector> points);

}  // namespace momo
