#ifndef BRPLAN_PROBLEM_HPP
#define BRPLAN_PROBLEM_HPP

#include <optional>
#include <vector>

#include "brplan/distribution.hpp"

namespace brplan {

/// Single-step bounded-rational decision problem: inverse temperature alpha
/// (nats-per-utile exchange rate), an ordered finite outcome set, a prior
/// policy Q over it, a utility per outcome, and an optional aspiration level
/// (target utility) used by the rejection samplers.
struct SingleStepProblem {
  double alpha = 1.0;
  LabelsPtr outcomes;
  std::vector<double> prior;
  std::vector<double> utility;
  std::optional<double> target;

  std::size_t size() const { return prior.size(); }
  Distribution prior_distribution() const { return Distribution(outcomes, prior); }
};

/// Convenience constructor; labels default to "x0".."x{n-1}".
SingleStepProblem make_problem(double alpha, std::vector<double> prior,
                               std::vector<double> utility,
                               std::optional<double> target = std::nullopt,
                               LabelsPtr outcomes = nullptr);

/// Returns the problem unchanged if every type invariant holds; otherwise
/// throws std::invalid_argument naming the failed invariant (mass sum,
/// negative probability, duplicate identifier, shape mismatch, non-finite
/// utility). With for_gibbs_solve set, alpha == 0 is rejected as well.
const SingleStepProblem& validate_problem(const SingleStepProblem& p,
                                          bool for_gibbs_solve = false);

double min_utility(const SingleStepProblem& p);
double max_utility(const SingleStepProblem& p);

}  // namespace brplan

#endif  // BRPLAN_PROBLEM_HPP
