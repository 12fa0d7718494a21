#ifndef BRPLAN_CORE_HPP
#define BRPLAN_CORE_HPP

#include <map>
#include <span>
#include <vector>

#include "brplan/problem.hpp"

namespace brplan {

/// log Z_alpha = log Σ_x Q(x) e^{α U(x)}, evaluated with a max-shifted
/// log-sum-exp so |α U| far beyond 700 stays finite. Summation order is the
/// outcome order, which makes results reproducible bit for bit.
double log_partition(const SingleStepProblem& p);

/// Z_alpha itself. For extreme |α U| the exponential of the (finite) log
/// partition may round to infinity; use log_partition where that matters.
double partition_function(const SingleStepProblem& p);

/// Gibbs posterior P(x) = Q(x) e^{α U(x)} / Z_alpha, computed via log-space
/// normalization. Outcomes with zero prior mass keep exactly zero posterior
/// mass; the returned masses sum to 1 within 1e-12.
Distribution gibbs_posterior(const SingleStepProblem& p);

/// Certainty-equivalent F = (1/α) log Z_alpha. Lies in [min U, max U] and
/// equals free_energy(p, gibbs_posterior(p)) within 1e-10.
double certainty_equivalent(const SingleStepProblem& p);

/// Free energy of an arbitrary policy:
///   F[P~] = Σ P~(x) U(x) − (1/α) Σ P~(x) log(P~(x)/Q(x)),
/// with 0·log(0/q) taken as 0. The policy must be absolutely continuous
/// w.r.t. the prior; a violation throws naming the offending outcome.
/// For α > 0 the Gibbs posterior maximizes this, for α < 0 it minimizes it.
double free_energy(const SingleStepProblem& p, const Distribution& policy);

enum class LimitRegime { plus_infinity, zero, minus_infinity };

struct LimitResult {
  Distribution posterior;
  double value = 0.0;
};

/// Zero- and infinite-temperature limits of the Gibbs solution. The problem's
/// alpha field is ignored. plus_infinity: uniform over the exact-utility
/// arg-max set, value max U. zero: the prior, value E_Q[U]. minus_infinity:
/// uniform over the arg-min set, value min U. Ties use exact floating-point
/// equality of utilities.
LimitResult limit_posterior(const SingleStepProblem& p, LimitRegime regime);

/// Pushforward of a joint distribution through a utility map: masses of
/// entries with exactly equal utility are merged, keyed by the utility value.
std::map<double, double> utility_pushforward(const Distribution& joint,
                                             std::span<const double> utility);

/// Information cost of narrowing a reference set to a target set hit with
/// conditional probability p: C = −(1/α) log p, i.e. (1/α) log E[N] for the
/// geometric number of draws N until the target is hit. Requires p in (0,1]
/// and α > 0; C = 0 iff p = 1, and C(pq) = C(p) + C(q).
double decision_complexity(double conditional_probability, double alpha);

/// One outcome's refinement: conditional sub-outcome probabilities and
/// sub-utilities (plus optional sub-labels, numbered if omitted).
struct OutcomeRefinement {
  std::vector<double> conditional;
  std::vector<double> utility;
  Labels labels;
};

/// Splits every outcome x into sub-outcomes (x,y) with prior
/// Q(x,y) = Q(x)·Q(y|x) and utilities U(x,y). Each coarse utility must equal
/// the certainty-equivalent of its refinement,
///   U(x) = (1/α) log Σ_y Q(y|x) e^{α U(x,y)},
/// within 1e-9 (checked; a failure names the offending outcome). The refined
/// problem's partition function matches the coarse one within 1e-12.
SingleStepProblem refine_problem(const SingleStepProblem& p,
                                 std::span<const OutcomeRefinement> refinements);

}  // namespace brplan

#endif  // BRPLAN_CORE_HPP
