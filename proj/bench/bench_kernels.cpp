// Compares the serial reference kernels against the OpenMP variants:
// log-sum-exp reductions and Monte Carlo trial batches.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "brplan/kernels.hpp"
#include "brplan/parallel.hpp"
#include "brplan/problem.hpp"
#include "brplan/rng.hpp"
#include "brplan/sampling.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_log_sum_exp() {
  std::printf("log_sum_exp                 serial        omp   speedup   |diff|\n");
  brplan::RngStream rng(42, 0);
  for (std::size_t n : {std::size_t{100000}, std::size_t{1000000}, std::size_t{10000000}}) {
    std::vector<double> args(n);
    for (double& a : args) a = 40.0 * rng.next_unit() - 20.0;

    const int reps = n >= 10000000 ? 5 : 20;
    auto t0 = Clock::now();
    double serial = 0.0;
    for (int r = 0; r < reps; ++r) serial = brplan::kernels::reference::log_sum_exp(args);
    const double ts = seconds_since(t0) / reps;

    t0 = Clock::now();
    double par = 0.0;
    for (int r = 0; r < reps; ++r) par = brplan::kernels::parallel::log_sum_exp(args);
    const double tp = seconds_since(t0) / reps;

    std::printf("  n=%-10zu %10.3f ms %8.3f ms %8.2fx %9.2e\n", n, ts * 1e3, tp * 1e3,
                ts / tp, std::abs(serial - par));
  }
}

void bench_trial_batch() {
  // 1e6 satisficing choices on a 64-outcome problem, serial vs parallel over
  // per-run derived streams (identical results either way).
  const std::size_t n_outcomes = 64;
  brplan::RngStream rng(7, 0);
  std::vector<double> prior(n_outcomes);
  std::vector<double> utility(n_outcomes);
  double s = 0.0;
  for (std::size_t i = 0; i < n_outcomes; ++i) {
    prior[i] = rng.next_unit();
    s += prior[i];
    utility[i] = rng.next_unit();
  }
  for (double& q : prior) q /= s;
  const auto problem = brplan::make_problem(2.0, prior, utility);
  const brplan::ChoiceSampler sampler(problem, brplan::max_utility(problem));

  const long long runs = 1000000;
  const brplan::RngStream base(123, 0);

  auto t0 = Clock::now();
  std::uint64_t serial_hits = 0;
  for (long long i = 0; i < runs; ++i) {
    brplan::RngStream r = base.derive(static_cast<std::uint64_t>(i));
    serial_hits += sampler.sample(r, 1 << 20).payload[0] == 0 ? 1 : 0;
  }
  const double ts = seconds_since(t0);

  t0 = Clock::now();
  std::uint64_t par_hits = 0;
#pragma omp parallel for num_threads(brplan::worker_count()) schedule(static) \
    reduction(+ : par_hits)
  for (long long i = 0; i < runs; ++i) {
    brplan::RngStream r = base.derive(static_cast<std::uint64_t>(i));
    par_hits += sampler.sample(r, 1 << 20).payload[0] == 0 ? 1 : 0;
  }
  const double tp = seconds_since(t0);

  std::printf("trial batch (1e6 choices)  %8.3f s  %8.3f s %8.2fx   match=%s\n", ts, tp,
              ts / tp, serial_hits == par_hits ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("workers: %d\n", brplan::worker_count());
  bench_log_sum_exp();
  bench_trial_batch();
  return 0;
}
