#include "brplan/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "brplan/constants.hpp"
#include "brplan/core.hpp"
#include "brplan/io.hpp"
#include "brplan/kernels.hpp"
#include "brplan/parallel.hpp"
#include "brplan/path_sampler.hpp"
#include "brplan/sampling.hpp"

namespace brplan {

namespace {

constexpr std::uint64_t kSweepProposalBudget = 1000000000ULL;

double nearest_rank(const std::vector<double>& sorted, double percentile) {
  const double n = static_cast<double>(sorted.size());
  std::size_t rank = static_cast<std::size_t>(std::ceil(percentile * n));
  if (rank < 1) rank = 1;
  if (rank > sorted.size()) rank = sorted.size();
  return sorted[rank - 1];
}

bool tree_has_mixed_signs(const DecisionTree& t) {
  for (std::int32_t ni : t.preorder()) {
    const TreeNode& n = t.node(ni);
    if (n.is_leaf()) continue;
    for (const TreeEdge& e : n.edges) {
      const TreeNode& c = t.node(e.child);
      if (!c.is_leaf() && std::signbit(c.alpha) != std::signbit(n.alpha)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.policy_count < 1) throw std::invalid_argument("sweep: policy_count must be >= 1");
  if (config.runs_per_alpha < 1) throw std::invalid_argument("sweep: runs_per_alpha must be >= 1");
  if (config.alpha_grid.empty()) throw std::invalid_argument("sweep: alpha grid is empty");

  const std::uint64_t n = config.policy_count;
  std::vector<double> utilities;
  if (!config.custom_utilities.empty()) {
    if (config.custom_utilities.size() != n) {
      throw std::invalid_argument("sweep: custom utility table size != policy_count");
    }
    utilities = config.custom_utilities;
  } else {
    utilities.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double x =
          n == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      utilities[i] = x * x;
    }
  }

  const RngStream base(config.seed, 0);
  {
    // Seeded assignment of utility values to policies. The uniform prior makes
    // every statistic below shuffle-invariant; the shuffle still pins the
    // policy identities for reproducibility.
    RngStream shuffle_rng = base.derive(0);
    for (std::uint64_t i = n; i-- > 1;) {
      const std::uint64_t j = shuffle_rng.next_below(i + 1);
      std::swap(utilities[i], utilities[j]);
    }
  }

  const SingleStepProblem problem = make_problem(
      1.0, std::vector<double>(n, 1.0 / static_cast<double>(n)), utilities, config.target,
      numbered_labels(n, "p"));

  std::vector<SweepRow> rows;
  for (std::size_t ai = 0; ai < config.alpha_grid.size(); ++ai) {
    const double alpha = config.alpha_grid[ai];

    SweepRow row;
    row.alpha = alpha;
    if (alpha == 0.0) {
      row.analytic_expected_trials = 1.0;
    } else {
      std::vector<double> t(n);
      for (std::uint64_t i = 0; i < n; ++i) t[i] = alpha * utilities[i];
      const double log_z =
          kernels::parallel::log_sum_exp(t) - std::log(static_cast<double>(n));
      row.analytic_expected_trials = std::exp(alpha * config.target - log_z);
    }

    SingleStepProblem tilted = problem;
    tilted.alpha = alpha;
    const ChoiceSampler sampler(tilted, config.target);

    const auto runs = static_cast<long long>(config.runs_per_alpha);
    std::vector<double> run_utilities(config.runs_per_alpha, 0.0);
    std::vector<double> run_trials(config.runs_per_alpha, 0.0);
    const RngStream alpha_base = base.derive(1 + ai);
    bool exhausted = false;

#pragma omp parallel for num_threads(worker_count()) schedule(static) \
    reduction(|| : exhausted)
    for (long long run = 0; run < runs; ++run) {
      RngStream rng = alpha_base.derive(static_cast<std::uint64_t>(run));
      const TrialReport r = sampler.sample(rng, kSweepProposalBudget);
      if (!r.accepted) {
        exhausted = true;
      } else {
        run_utilities[static_cast<std::size_t>(run)] =
            utilities[static_cast<std::size_t>(r.payload[0])];
        run_trials[static_cast<std::size_t>(run)] = static_cast<double>(r.proposals_drawn);
      }
    }
    if (exhausted) throw std::runtime_error("sweep: a run exhausted its proposal budget");

    double mean_u = 0.0;
    double mean_trials = 0.0;
    for (std::uint64_t i = 0; i < config.runs_per_alpha; ++i) {
      mean_u += run_utilities[i];
      mean_trials += run_trials[i];
    }
    row.mean_utility = mean_u / static_cast<double>(config.runs_per_alpha);
    row.mean_trials = mean_trials / static_cast<double>(config.runs_per_alpha);

    std::sort(run_utilities.begin(), run_utilities.end());
    row.decile10 = nearest_rank(run_utilities, 0.10);
    row.decile90 = nearest_rank(run_utilities, 0.90);
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "alpha,mean_utility,decile10,decile90,mean_trials,analytic_expected_trials\n";
  for (const SweepRow& r : rows) {
    out += format_number(r.alpha) + ',' + format_number(r.mean_utility) + ',' +
           format_number(r.decile10) + ',' + format_number(r.decile90) + ',' +
           format_number(r.mean_trials) + ',' + format_number(r.analytic_expected_trials) +
           '\n';
  }
  return out;
}

std::vector<MapRow> run_map(const DecisionTree& two_step, std::vector<double> alpha_grid,
                            std::vector<double> beta_grid) {
  if (alpha_grid.empty() || beta_grid.empty()) {
    throw std::invalid_argument("map: temperature grids must be nonempty");
  }
  if (two_step.node(DecisionTree::root()).is_leaf()) {
    throw std::invalid_argument("map: the tree's root must be internal");
  }
  for (double& a : alpha_grid)
    if (a == 0.0) a = kChanceAlpha;
  for (double& b : beta_grid)
    if (b == 0.0) b = kChanceAlpha;

  const std::size_t cells = alpha_grid.size() * beta_grid.size();
  std::vector<MapRow> rows(cells);

#pragma omp parallel for num_threads(worker_count()) schedule(static)
  for (long long c = 0; c < static_cast<long long>(cells); ++c) {
    const std::size_t ai = static_cast<std::size_t>(c) / beta_grid.size();
    const std::size_t bi = static_cast<std::size_t>(c) % beta_grid.size();

    DecisionTree t = two_step;
    t.node(DecisionTree::root()).alpha = alpha_grid[ai];
    for (const TreeEdge& e : t.node(DecisionTree::root()).edges) {
      TreeNode& child = t.node(e.child);
      if (!child.is_leaf()) child.alpha = beta_grid[bi];
    }
    const TreeSolution sol = backward_induction(t);
    rows[static_cast<std::size_t>(c)] = {alpha_grid[ai], beta_grid[bi],
                                         sol.node_values[DecisionTree::root()]};
  }
  return rows;
}

std::string map_csv(const std::vector<MapRow>& rows) {
  std::string out = "alpha,beta,value\n";
  for (const MapRow& r : rows) {
    out += format_number(r.alpha) + ',' + format_number(r.beta) + ',' +
           format_number(r.value) + '\n';
  }
  return out;
}

std::string solve_tree_csv(const DecisionTree& t) {
  const TreeSolution sol = backward_induction(t);

  std::string out = "path,record,label,value\n";
  struct Item {
    std::int32_t node;
    std::string path;
  };
  std::vector<Item> stack{{DecisionTree::root(), ""}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const TreeNode& n = t.node(it.node);
    out += it.path + ",value,," +
           format_number(sol.node_values[static_cast<std::size_t>(it.node)]) + '\n';
    if (n.is_leaf()) continue;
    const auto& row = sol.node_policies[static_cast<std::size_t>(it.node)];
    for (std::size_t e = 0; e < n.edges.size(); ++e) {
      out += it.path + ",policy," + n.edges[e].label + ',' + format_number(row[e]) + '\n';
    }
    for (std::size_t e = n.edges.size(); e-- > 0;) {
      const TreeEdge& edge = n.edges[e];
      stack.push_back(
          {edge.child, it.path.empty() ? edge.label : it.path + "/" + edge.label});
    }
  }
  return out;
}

std::string solve_problem_csv(const SingleStepProblem& p) {
  const Distribution posterior = gibbs_posterior(p);
  std::string out = "path,record,label,value\n";
  out += ",value,," + format_number(certainty_equivalent(p)) + '\n';
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    out += ",policy," + posterior.labels()[i] + ',' + format_number(posterior[i]) + '\n';
  }
  return out;
}

namespace {

const std::string kSampleHeader =
    "record,sample,accepted,path,attempts,proposals,base_trials,count,frequency\n";

std::string sample_row(std::uint64_t index, const TrialReport& r, const std::string& path) {
  std::string out = "sample," + std::to_string(index) + ',' + (r.accepted ? "1" : "0") + ',' +
                    path + ',' + std::to_string(r.attempts) + ',' +
                    std::to_string(r.proposals_drawn) + ',' + std::to_string(r.base_trials) +
                    ",,\n";
  return out;
}

std::string frequency_rows(const std::map<std::string, std::uint64_t>& counts,
                           std::uint64_t accepted_total) {
  std::string out;
  for (const auto& [path, count] : counts) {
    const double freq = accepted_total == 0
                            ? 0.0
                            : static_cast<double>(count) / static_cast<double>(accepted_total);
    out += "path_frequency,,," + path + ",,,," + std::to_string(count) + ',' +
           format_number(freq) + '\n';
  }
  return out;
}

}  // namespace

std::string sample_tree_csv(const DecisionTree& t, const SampleConfig& config) {
  const double target = config.target.value_or(global_target_bound(t));
  if (tree_has_mixed_signs(t) && !config.allow_mixed_signs) {
    throw std::invalid_argument(
        "sample: tree mixes temperature signs; pass --experimental-mixed-signs to proceed");
  }
  // Validates the target against the tight bound before any work.
  PathSampleOptions options;
  options.allow_mixed_signs = config.allow_mixed_signs;
  {
    RngStream probe(config.seed, 0);
    if (config.samples > 0) {
      sample_path(t, target, probe, options);  // discarded; bound check + shape check
    }
  }

  const EnumerableTreeModel model(t);
  const RngStream base(config.seed, 0);
  const auto samples = static_cast<long long>(config.samples);
  std::vector<TrialReport> reports(config.samples);

#pragma omp parallel for num_threads(worker_count()) schedule(static)
  for (long long i = 0; i < samples; ++i) {
    RngStream rng = base.derive(static_cast<std::uint64_t>(i));
    reports[static_cast<std::size_t>(i)] =
        sample_path_until_accept(model, target, rng, config.max_attempts, options);
  }

  std::string out = kSampleHeader;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t accepted_total = 0;
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    const TrialReport& r = reports[i];
    const std::string path = r.accepted ? path_label(t, r.payload) : "";
    out += sample_row(i, r, path);
    if (r.accepted) {
      ++counts[path];
      ++accepted_total;
    }
  }
  out += frequency_rows(counts, accepted_total);
  return out;
}

std::string sample_problem_csv(const SingleStepProblem& p, const SampleConfig& config) {
  const double target = config.target.value_or(p.target.value_or(max_utility(p)));
  const ChoiceSampler sampler(p, target);

  const RngStream base(config.seed, 0);
  const auto samples = static_cast<long long>(config.samples);
  std::vector<TrialReport> reports(config.samples);

#pragma omp parallel for num_threads(worker_count()) schedule(static)
  for (long long i = 0; i < samples; ++i) {
    RngStream rng = base.derive(static_cast<std::uint64_t>(i));
    reports[static_cast<std::size_t>(i)] = sampler.sample(rng, config.max_attempts);
  }

  std::string out = kSampleHeader;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t accepted_total = 0;
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    const TrialReport& r = reports[i];
    const std::string label =
        r.accepted ? (*p.outcomes)[static_cast<std::size_t>(r.payload[0])] : "";
    out += sample_row(i, r, label);
    if (r.accepted) {
      ++counts[label];
      ++accepted_total;
    }
  }
  out += frequency_rows(counts, accepted_total);
  return out;
}

std::string ellsberg_csv(const EllsbergReport& report) {
  std::string out = "key,value\n";
  out += "p_left," + format_number(report.p_left) + '\n';
  out += "p_right," + format_number(report.p_right) + '\n';
  out += "expected_theta," + format_number(report.expected_theta) + '\n';
  out += "expected_winning_fraction," + format_number(report.expected_winning_fraction) + '\n';
  return out;
}

}  // namespace brplan
