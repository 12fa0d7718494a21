#ifndef BRPLAN_SAMPLING_HPP
#define BRPLAN_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "brplan/equivalence.hpp"
#include "brplan/problem.hpp"
#include "brplan/rng.hpp"
#include "brplan/trial.hpp"

namespace brplan {

/// Reusable rejection sampler for one problem/target pair: the proposal table
/// and acceptance exponents are built once at construction (which also checks
/// the target bound).
class ChoiceSampler {
 public:
  ChoiceSampler(const SingleStepProblem& p, double u_star);

  /// One trial: draw x ~ Q and a uniform u, accept iff log u ≤ α [U(x) − U*].
  TrialReport trial(RngStream& rng) const;

  /// Trials until acceptance or until max_proposals proposals are spent.
  TrialReport sample(RngStream& rng, std::uint64_t max_proposals) const;

  double u_star() const { return u_star_; }

 private:
  DiscreteSampler proposal_;
  std::vector<double> log_accept_;  // α [U(x) − U*] per outcome
  double u_star_;
};

/// One rejection-sampling trial: draw x ~ Q and a uniform u, accept iff
/// log u ≤ α [U(x) − U*] (the log-space form of u ≤ e^{α[U(x)−U*]}).
/// Valid targets: U* ≥ max U when α ≥ 0, U* ≤ min U when α ≤ 0; a violation
/// throws before any variate is drawn. Accepted payloads are distributed as
/// the Gibbs posterior.
TrialReport accept_trial(const SingleStepProblem& p, double u_star, RngStream& rng);

/// Repeats accept_trial until acceptance or until max_proposals proposals have
/// been spent; a budget-exhausted report has accepted == false. The number of
/// proposals until acceptance is geometric with success p_α.
TrialReport sample_choice(const SingleStepProblem& p, double u_star, RngStream& rng,
                          std::uint64_t max_proposals);

/// Exact per-trial success probability p_α = Z_α / e^{α U*}, in (0,1],
/// computed in log space. Same target bounds as accept_trial.
double success_probability(const SingleStepProblem& p, double u_star);

/// Smallest n with (1−p)^n ≤ δ, i.e. ⌈log δ / log(1−p)⌉. Requires p, δ in
/// (0,1) strictly.
std::uint64_t required_samples(double p, double delta);

struct PowerCoefficient {
  double b = 0.0;  // series coefficient b_n
  double f = 0.0;  // partial sum f_n = b_1 + ... + b_n
};

/// Coefficients of the Bernoulli-power series for exponent ξ in (0,1):
/// b_1 = ξ and b_k = −b_{k−1} (ξ−k+1)/k, with f_n the running sum (f_0 = 0).
/// All b_n lie in [0,1]; f_n rises monotonically toward 1. Entry i of the
/// result holds (b_{i+1}, f_{i+1}).
std::vector<PowerCoefficient> bernoulli_power_coefficients(double xi, std::size_t n_max);

/// ξ ∈ ℕ: requires k consecutive base successes; fails fast on the first base
/// failure. Success probability p^k; payload is the last success's payload.
TrialReport power_trial_integer(const BernoulliTrial& trial, std::uint64_t k, RngStream& rng);

/// ξ ∈ (0,1): draws a failure budget f* ~ U(0,1) up front, then runs base
/// trials; each base failure advances the coefficient recurrence, runs the
/// next base trial, and aborts with failure once f* ≤ f. Success probability
/// p^ξ (the first base success is returned as the payload).
TrialReport power_trial_fractional(const BernoulliTrial& trial, double xi, RngStream& rng);

/// Reciprocal acceptance: draw x ~ Q and u, fail iff 1/u < e^{α[U(x)−U*]}.
/// The target bound flips sides: U* ≤ min U when α > 0, U* ≥ max U when
/// α < 0. Per-trial acceptance is Σ_x Q(x)·min{1, e^{α[U*−U(x)]}} and accepted
/// payloads are distributed ∝ Q(x) e^{−α U(x)} — the Gibbs posterior of the
/// sign-flipped problem, not of (α, U) itself.
TrialReport power_trial_inverse(const SingleStepProblem& p, double u_star, RngStream& rng);

/// General exponent: the sign selects normal (+1) vs reciprocal (−1)
/// acceptance — the reciprocal-side trial must be supplied when sign is −1 —
/// then ⌊|ξ|⌋ consecutive successes are required followed by one fractional
/// stage when |ξ| has a fractional part (skipped exactly when |ξ| is an
/// integer). Payload comes from the final stage. For sign +1 the success
/// probability is p^{|ξ|}.
TrialReport power_trial_general(const BernoulliTrial& trial, const ExponentSpec& spec,
                                const BernoulliTrial* inverse_trial, RngStream& rng);

/// Bernoulli trial wrapping accept_trial on a problem; precomputes the
/// proposal sampler once. Payload is the accepted outcome index.
BernoulliTrial make_problem_trial(const SingleStepProblem& p, double u_star);

/// Bernoulli trial wrapping power_trial_inverse on a problem.
BernoulliTrial make_inverse_problem_trial(const SingleStepProblem& p, double u_star);

/// Deterministic model of racing `workers` independent streams: round-robin
/// rounds of one trial per worker, returning the earliest acceptance in
/// (round, worker) order. Trials are i.i.d., so the accepted-payload
/// distribution equals sample_choice's.
TrialReport race_choice(const SingleStepProblem& p, double u_star, const RngStream& base,
                        int workers, std::uint64_t max_rounds);

}  // namespace brplan

#endif  // BRPLAN_SAMPLING_HPP
