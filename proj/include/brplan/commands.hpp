#ifndef BRPLAN_COMMANDS_HPP
#define BRPLAN_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brplan/problem.hpp"
#include "brplan/tree.hpp"
#include "brplan/tree_builders.hpp"

namespace brplan {

/// Configuration of the satisficing-choice sweep: N candidate policies under a
/// uniform prior, swept over inverse temperatures with a fixed aspiration
/// level. The default utility shape maps N uniformly spaced points of the unit
/// interval through x^2 and assigns them to policies by a seeded shuffle; a
/// custom table overrides it.
struct SweepConfig {
  std::uint64_t policy_count = 100000;
  std::vector<double> custom_utilities;  // empty => squared-grid shape
  std::vector<double> alpha_grid = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  std::uint64_t runs_per_alpha = 300;
  double target = 1.0;
  std::uint64_t seed = 0;
};

struct SweepRow {
  double alpha = 0.0;
  double mean_utility = 0.0;
  double decile10 = 0.0;  // nearest-rank 10th percentile of per-run utilities
  double decile90 = 0.0;
  double mean_trials = 0.0;
  double analytic_expected_trials = 0.0;  // 1/p_alpha by exact summation
};

/// Runs runs_per_alpha independent satisficing choices per grid point, in
/// parallel over run indices with per-run derived streams (deterministic for
/// any worker count).
std::vector<SweepRow> run_sweep(const SweepConfig& config);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct MapRow {
  double alpha = 0.0;  // root (agent) temperature
  double beta = 0.0;   // depth-1 (environment) temperature
  double value = 0.0;  // root certainty-equivalent
};

/// Certainty-equivalent map of a two-step tree over (alpha, beta) grids: the
/// root gets alpha, every internal depth-1 node gets beta, and the tree is
/// solved exactly per cell. Zero grid entries are replaced by the chance
/// epsilon (alpha = 0 is not solvable).
std::vector<MapRow> run_map(const DecisionTree& two_step, std::vector<double> alpha_grid,
                            std::vector<double> beta_grid);
std::string map_csv(const std::vector<MapRow>& rows);

/// Exact solve as CSV: one value row per node and one policy row per internal
/// node's edge, in depth-first label order ("path,record,label,value").
std::string solve_tree_csv(const DecisionTree& t);
std::string solve_problem_csv(const SingleStepProblem& p);

struct SampleConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  std::optional<double> target;  // default: the tight global bound
  std::uint64_t max_attempts = 1000000;
  bool allow_mixed_signs = false;
};

/// Stochastic planning as CSV: one row per sample (path, attempts, proposals,
/// base trials) followed by empirical path-frequency summary rows. Samples
/// use per-index derived streams and are evaluated in parallel; output is
/// ordered by sample index.
std::string sample_tree_csv(const DecisionTree& t, const SampleConfig& config);

/// Single-step counterpart; the payload column holds the outcome id.
std::string sample_problem_csv(const SingleStepProblem& p, const SampleConfig& config);

std::string ellsberg_csv(const EllsbergReport& report);

}  // namespace brplan

#endif  // BRPLAN_COMMANDS_HPP
