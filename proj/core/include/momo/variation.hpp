#pragma once

#include <utility>

#include "momo/core.hpp"
#include "momo/random.hpp"

namespace momo {

/// Bounded simulated binary crossover (the NSGA-II reference formulation).
///
/// With probability 1 - pc both children are copies of the parents. Otherwise
/// each variable is recombined with probability 0.5 (copied otherwise), using
/// the bound-aware spread factor for index eta_c, and the pair of child values
/// is swapped with probability 0.5. Results are clipped to the bounds.
///
/// Draw order: one gate draw; then per variable a gating draw and, when
/// recombined with distinct parent values, a spread draw and a swap draw.
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                                        double pc, double eta_c, const Bounds& bounds,
                                                        RandomStream& rng);

/// Bounded polynomial mutation. Each coordinate is perturbed with probability
/// pm; draw order per variable is a gating draw then, if mutated, a shape draw.
DecisionVector polynomial_mutation(const DecisionVector& x, double pm, double eta_m, const Bounds& bounds,
                                   RandomStream& rng);

}  // namespace momo
