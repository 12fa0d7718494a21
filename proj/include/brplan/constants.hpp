#ifndef BRPLAN_CONSTANTS_HPP
#define BRPLAN_CONSTANTS_HPP

namespace brplan {

// Probability masses (per distribution / per tree node) must sum to 1 within this.
inline constexpr double kMassTol = 1e-12;

// Coarse utilities passed to refine_problem must match the certainty-equivalent
// of their refinement within this.
inline constexpr double kCoarseUtilityTol = 1e-9;

// Inverse temperature standing in for "indifferent" chance nodes, which cannot
// carry alpha = 0. The certainty-equivalent error this introduces is bounded by
// kChanceAlpha * Var[U] / 2, negligible at the utility scales handled here.
inline constexpr double kChanceAlpha = 1e-6;

}  // namespace brplan

#endif  // BRPLAN_CONSTANTS_HPP
