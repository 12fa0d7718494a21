#include "brplan/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace brplan {

SingleStepProblem make_problem(double alpha, std::vector<double> prior,
                               std::vector<double> utility, std::optional<double> target,
                               LabelsPtr outcomes) {
  SingleStepProblem p;
  p.alpha = alpha;
  p.outcomes = outcomes ? std::move(outcomes) : numbered_labels(prior.size());
  p.prior = std::move(prior);
  p.utility = std::move(utility);
  p.target = target;
  return p;
}

const SingleStepProblem& validate_problem(const SingleStepProblem& p, bool for_gibbs_solve) {
  if (!p.outcomes) throw std::invalid_argument("problem: missing outcome identifiers");
  if (p.prior.empty()) throw std::invalid_argument("problem: empty outcome set");
  if (p.utility.size() != p.prior.size()) {
    throw std::invalid_argument("problem: " + std::to_string(p.utility.size()) +
                                " utilities for " + std::to_string(p.prior.size()) +
                                " outcomes");
  }
  Distribution(p.outcomes, p.prior).validate();
  for (std::size_t i = 0; i < p.utility.size(); ++i) {
    if (!std::isfinite(p.utility[i])) {
      throw std::invalid_argument("problem: non-finite utility at outcome '" +
                                  (*p.outcomes)[i] + "'");
    }
  }
  if (!std::isfinite(p.alpha)) throw std::invalid_argument("problem: non-finite alpha");
  if (for_gibbs_solve && p.alpha == 0.0) {
    throw std::invalid_argument(
        "problem: alpha = 0 has no Gibbs solution; query the zero-temperature limit instead");
  }
  if (p.target && !std::isfinite(*p.target)) {
    throw std::invalid_argument("problem: non-finite target utility");
  }
  return p;
}

double min_utility(const SingleStepProblem& p) {
  return *std::min_element(p.utility.begin(), p.utility.end());
}

double max_utility(const SingleStepProblem& p) {
  return *std::max_element(p.utility.begin(), p.utility.end());
}

}  // namespace brplan
