#include "brplan/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "brplan/core.hpp"

namespace brplan {

namespace {

void check_target_bound(const SingleStepProblem& p, double u_star) {
  validate_problem(p);
  if (p.alpha > 0.0 && u_star < max_utility(p)) {
    throw std::invalid_argument("target bound: alpha > 0 requires U* >= max U");
  }
  if (p.alpha < 0.0 && u_star > min_utility(p)) {
    throw std::invalid_argument("target bound: alpha < 0 requires U* <= min U");
  }
  // alpha == 0 accepts every proposal regardless of the target.
}

void check_inverse_target_bound(const SingleStepProblem& p, double u_star) {
  validate_problem(p);
  if (p.alpha > 0.0 && u_star > min_utility(p)) {
    throw std::invalid_argument("inverse target bound: alpha > 0 requires U* <= min U");
  }
  if (p.alpha < 0.0 && u_star < max_utility(p)) {
    throw std::invalid_argument("inverse target bound: alpha < 0 requires U* >= max U");
  }
}

std::vector<double> acceptance_exponents(const SingleStepProblem& p, double u_star) {
  std::vector<double> e(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) e[i] = p.alpha * (p.utility[i] - u_star);
  return e;
}

TrialReport report_from(const TrialOutcome& o) {
  TrialReport r;
  r.accepted = o.success;
  if (o.success) r.payload = {o.payload};
  r.proposals_drawn = o.proposals;
  r.base_trials = 1;
  r.attempts = 1;
  return r;
}

// Shared state for trial closures.
struct TrialSetup {
  DiscreteSampler proposal;
  std::vector<double> log_accept;
};

TrialOutcome run_accept(const DiscreteSampler& proposal, const std::vector<double>& log_accept,
                        RngStream& rng) {
  const std::int32_t x = proposal.draw(rng);
  const double u = rng.next_unit();
  TrialOutcome out;
  out.payload = x;
  out.success = std::log(u) <= log_accept[static_cast<std::size_t>(x)];
  return out;
}

TrialOutcome run_inverse(const DiscreteSampler& proposal, const std::vector<double>& log_accept,
                         RngStream& rng) {
  const std::int32_t x = proposal.draw(rng);
  const double u = rng.next_unit();
  TrialOutcome out;
  out.payload = x;
  // Fail iff 1/u < e^{α[U(x)−U*]}, i.e. −log u < α[U(x)−U*].
  out.success = !(-std::log(u) < log_accept[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace

ChoiceSampler::ChoiceSampler(const SingleStepProblem& p, double u_star) : u_star_(u_star) {
  check_target_bound(p, u_star);
  proposal_ = DiscreteSampler(p.prior);
  log_accept_ = acceptance_exponents(p, u_star);
}

TrialReport ChoiceSampler::trial(RngStream& rng) const {
  return report_from(run_accept(proposal_, log_accept_, rng));
}

TrialReport ChoiceSampler::sample(RngStream& rng, std::uint64_t max_proposals) const {
  if (max_proposals < 1) throw std::invalid_argument("sample: max_proposals must be >= 1");
  TrialReport r;
  while (r.proposals_drawn < max_proposals) {
    const TrialOutcome o = run_accept(proposal_, log_accept_, rng);
    r.proposals_drawn += o.proposals;
    r.base_trials += 1;
    r.attempts += 1;
    if (o.success) {
      r.accepted = true;
      r.payload = {o.payload};
      break;
    }
  }
  return r;
}

TrialReport accept_trial(const SingleStepProblem& p, double u_star, RngStream& rng) {
  return ChoiceSampler(p, u_star).trial(rng);
}

TrialReport sample_choice(const SingleStepProblem& p, double u_star, RngStream& rng,
                          std::uint64_t max_proposals) {
  return ChoiceSampler(p, u_star).sample(rng, max_proposals);
}

double success_probability(const SingleStepProblem& p, double u_star) {
  check_target_bound(p, u_star);
  if (p.alpha == 0.0) return 1.0;
  return std::exp(log_partition(p) - p.alpha * u_star);
}

std::uint64_t required_samples(double p, double delta) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("required_samples: p must lie strictly in (0,1)");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw std::invalid_argument("required_samples: delta must lie strictly in (0,1)");
  }
  const double n = std::ceil(std::log(delta) / std::log1p(-p));
  return n < 1.0 ? 1 : static_cast<std::uint64_t>(n);
}

std::vector<PowerCoefficient> bernoulli_power_coefficients(double xi, std::size_t n_max) {
  if (!(xi > 0.0) || !(xi < 1.0)) {
    throw std::invalid_argument("bernoulli_power_coefficients: xi must lie in (0,1)");
  }
  std::vector<PowerCoefficient> out;
  out.reserve(n_max);
  double b = -1.0;
  double f = 0.0;
  for (std::size_t k = 1; k <= n_max; ++k) {
    b = -b * (xi - static_cast<double>(k) + 1.0) / static_cast<double>(k);
    f = std::min(f + b, 1.0);  // clamp against rounding drift
    out.push_back({b, f});
  }
  return out;
}

TrialReport power_trial_integer(const BernoulliTrial& trial, std::uint64_t k, RngStream& rng) {
  if (k < 1) throw std::invalid_argument("power_trial_integer: k must be >= 1");
  TrialReport r;
  r.attempts = 1;
  TrialOutcome last;
  for (std::uint64_t i = 0; i < k; ++i) {
    last = trial(rng);
    r.base_trials += 1;
    r.proposals_drawn += last.proposals;
    if (!last.success) return r;  // fail fast
  }
  r.accepted = true;
  r.payload = {last.payload};
  return r;
}

TrialReport power_trial_fractional(const BernoulliTrial& trial, double xi, RngStream& rng) {
  if (!(xi > 0.0) || !(xi < 1.0)) {
    throw std::invalid_argument("power_trial_fractional: xi must lie in (0,1)");
  }
  TrialReport r;
  r.attempts = 1;

  const double f_star = rng.next_unit();
  double b = -1.0;
  double f = 0.0;
  double k = 1.0;

  TrialOutcome o = trial(rng);
  r.base_trials += 1;
  r.proposals_drawn += o.proposals;
  while (!o.success) {
    b = -b * (xi - k + 1.0) / k;
    f = std::min(f + b, 1.0);
    k += 1.0;
    o = trial(rng);
    r.base_trials += 1;
    r.proposals_drawn += o.proposals;
    if (f_star <= f) return r;  // failure budget exhausted
  }
  r.accepted = true;
  r.payload = {o.payload};
  return r;
}

TrialReport power_trial_inverse(const SingleStepProblem& p, double u_star, RngStream& rng) {
  check_inverse_target_bound(p, u_star);
  const DiscreteSampler proposal(p.prior);
  const std::vector<double> log_accept = acceptance_exponents(p, u_star);
  return report_from(run_inverse(proposal, log_accept, rng));
}

TrialReport power_trial_general(const BernoulliTrial& trial, const ExponentSpec& spec,
                                const BernoulliTrial* inverse_trial, RngStream& rng) {
  if (spec.xi == 0.0) throw std::invalid_argument("power_trial_general: xi must be nonzero");
  const BernoulliTrial* stage = &trial;
  if (spec.sign < 0) {
    if (inverse_trial == nullptr) {
      throw std::invalid_argument(
          "power_trial_general: negative exponent needs a reciprocal-acceptance trial");
    }
    stage = inverse_trial;
  }

  TrialReport r;
  r.attempts = 1;
  TrialOutcome last;
  bool have_payload = false;

  for (std::uint64_t i = 0; i < spec.integer_part; ++i) {
    last = (*stage)(rng);
    r.base_trials += 1;
    r.proposals_drawn += last.proposals;
    if (!last.success) return r;
    have_payload = true;
  }

  if (spec.fractional_part > 0.0) {
    const TrialReport frac = power_trial_fractional(*stage, spec.fractional_part, rng);
    r.base_trials += frac.base_trials;
    r.proposals_drawn += frac.proposals_drawn;
    if (!frac.accepted) return r;
    r.accepted = true;
    r.payload = frac.payload;
    return r;
  }

  if (!have_payload) {
    // Cannot happen: |xi| < 1 forces a nonzero fractional part.
    throw std::logic_error("power_trial_general: empty composition");
  }
  r.accepted = true;
  r.payload = {last.payload};
  return r;
}

BernoulliTrial make_problem_trial(const SingleStepProblem& p, double u_star) {
  check_target_bound(p, u_star);
  auto setup = std::make_shared<const TrialSetup>(
      TrialSetup{DiscreteSampler(p.prior), acceptance_exponents(p, u_star)});
  return [setup](RngStream& rng) { return run_accept(setup->proposal, setup->log_accept, rng); };
}

BernoulliTrial make_inverse_problem_trial(const SingleStepProblem& p, double u_star) {
  check_inverse_target_bound(p, u_star);
  auto setup = std::make_shared<const TrialSetup>(
      TrialSetup{DiscreteSampler(p.prior), acceptance_exponents(p, u_star)});
  return [setup](RngStream& rng) { return run_inverse(setup->proposal, setup->log_accept, rng); };
}

TrialReport race_choice(const SingleStepProblem& p, double u_star, const RngStream& base,
                        int workers, std::uint64_t max_rounds) {
  if (workers < 1) throw std::invalid_argument("race_choice: need at least one worker");
  const ChoiceSampler sampler(p, u_star);

  std::vector<RngStream> streams;
  streams.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) streams.push_back(base.derive(static_cast<std::uint64_t>(w)));

  TrialReport r;
  for (std::uint64_t round = 0; round < max_rounds; ++round) {
    for (int w = 0; w < workers; ++w) {
      const TrialReport t = sampler.trial(streams[static_cast<std::size_t>(w)]);
      r.proposals_drawn += t.proposals_drawn;
      r.base_trials += 1;
      r.attempts += 1;
      if (t.accepted) {
        r.accepted = true;
        r.payload = t.payload;
        return r;
      }
    }
  }
  return r;
}

}  // namespace brplan
