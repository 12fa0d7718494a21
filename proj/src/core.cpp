#include "brplan/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "brplan/constants.hpp"
#include "brplan/kernels.hpp"

namespace brplan {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log Q(x) + alpha * U(x) per outcome; zero prior mass maps to -inf.
std::vector<double> log_weights(const SingleStepProblem& p) {
  std::vector<double> t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    t[i] = p.prior[i] > 0.0 ? std::log(p.prior[i]) + p.alpha * p.utility[i] : kNegInf;
  }
  return t;
}

}  // namespace

double log_partition(const SingleStepProblem& p) {
  validate_problem(p, /*for_gibbs_solve=*/true);
  return kernels::reference::log_sum_exp(log_weights(p));
}

double partition_function(const SingleStepProblem& p) { return std::exp(log_partition(p)); }

Distribution gibbs_posterior(const SingleStepProblem& p) {
  validate_problem(p, /*for_gibbs_solve=*/true);
  const std::vector<double> t = log_weights(p);
  double m = kNegInf;
  for (double v : t)
    if (v > m) m = v;

  std::vector<double> w(t.size(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    w[i] = t[i] == kNegInf ? 0.0 : std::exp(t[i] - m);
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return Distribution(p.outcomes, std::move(w));
}

double certainty_equivalent(const SingleStepProblem& p) { return log_partition(p) / p.alpha; }

double free_energy(const SingleStepProblem& p, const Distribution& policy) {
  validate_problem(p, /*for_gibbs_solve=*/true);
  policy.validate();
  if (policy.size() != p.size()) {
    throw std::invalid_argument("free_energy: policy has " + std::to_string(policy.size()) +
                                " outcomes, problem has " + std::to_string(p.size()));
  }
  double expected_utility = 0.0;
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = policy[i];
    if (pi == 0.0) continue;
    if (p.prior[i] == 0.0) {
      throw std::invalid_argument("free_energy: policy puts mass on outcome '" +
                                  (*p.outcomes)[i] + "' outside the prior's support");
    }
    expected_utility += pi * p.utility[i];
    kl += pi * std::log(pi / p.prior[i]);
  }
  return expected_utility - kl / p.alpha;
}

LimitResult limit_posterior(const SingleStepProblem& p, LimitRegime regime) {
  validate_problem(p);
  if (regime == LimitRegime::zero) {
    double eu = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) eu += p.prior[i] * p.utility[i];
    return {p.prior_distribution(), eu};
  }

  const bool want_max = regime == LimitRegime::plus_infinity;
  const double extremum = want_max ? max_utility(p) : min_utility(p);
  std::size_t ties = 0;
  for (double u : p.utility) ties += (u == extremum) ? 1 : 0;

  std::vector<double> mass(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.utility[i] == extremum) mass[i] = 1.0 / static_cast<double>(ties);
  }
  return {Distribution(p.outcomes, std::move(mass)), extremum};
}

std::map<double, double> utility_pushforward(const Distribution& joint,
                                             std::span<const double> utility) {
  joint.validate();
  if (utility.size() != joint.size()) {
    throw std::invalid_argument("utility_pushforward: utility/joint size mismatch");
  }
  std::map<double, double> out;
  for (std::size_t i = 0; i < joint.size(); ++i) out[utility[i]] += joint[i];
  return out;
}

double decision_complexity(double conditional_probability, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("decision_complexity: alpha must be > 0");
  if (!(conditional_probability > 0.0) || conditional_probability > 1.0) {
    throw std::invalid_argument(
        "decision_complexity: conditional probability must lie in (0,1]; "
        "p = 0 means infinite complexity");
  }
  return -std::log(conditional_probability) / alpha;
}

SingleStepProblem refine_problem(const SingleStepProblem& p,
                                 std::span<const OutcomeRefinement> refinements) {
  validate_problem(p, /*for_gibbs_solve=*/true);
  if (refinements.size() != p.size()) {
    throw std::invalid_argument("refine_problem: need one refinement per outcome");
  }

  Labels labels;
  std::vector<double> prior;
  std::vector<double> utility;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const OutcomeRefinement& r = refinements[i];
    const std::size_t k = r.conditional.size();
    if (k == 0 || r.utility.size() != k || (!r.labels.empty() && r.labels.size() != k)) {
      throw std::invalid_argument("refine_problem: malformed refinement for outcome '" +
                                  (*p.outcomes)[i] + "'");
    }
    Distribution(nullptr, r.conditional).validate();

    // The coarse utility must already be the certainty-equivalent of its
    // sub-utilities under the conditional.
    std::vector<double> t(k);
    for (std::size_t j = 0; j < k; ++j) {
      t[j] = r.conditional[j] > 0.0 ? std::log(r.conditional[j]) + p.alpha * r.utility[j]
                                    : kNegInf;
    }
    const double ce = kernels::reference::log_sum_exp(t) / p.alpha;
    if (std::abs(ce - p.utility[i]) > kCoarseUtilityTol) {
      throw std::invalid_argument(
          "refine_problem: outcome '" + (*p.outcomes)[i] + "' has utility " +
          std::to_string(p.utility[i]) + " but its refinement's certainty-equivalent is " +
          std::to_string(ce));
    }

    for (std::size_t j = 0; j < k; ++j) {
      labels.push_back((*p.outcomes)[i] + "." +
                       (r.labels.empty() ? "y" + std::to_string(j) : r.labels[j]));
      prior.push_back(p.prior[i] * r.conditional[j]);
      utility.push_back(r.utility[j]);
    }
  }
  return make_problem(p.alpha, std::move(prior), std::move(utility), p.target,
                      make_labels(std::move(labels)));
}

}  // namespace brplan
