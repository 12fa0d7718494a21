#include "brplan/path_sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace brplan {

EnumerableTreeModel::EnumerableTreeModel(const DecisionTree& t) : tree_(&t) {
  samplers_.reserve(t.node_count());
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const TreeNode& n = t.node(static_cast<std::int32_t>(i));
    std::vector<double> w;
    w.reserve(n.edges.size());
    for (const TreeEdge& e : n.edges) w.push_back(e.prior);
    samplers_.emplace_back(w);
  }
}

GenerativeTreeModel::EdgeSample EnumerableTreeModel::sample_edge(Handle node,
                                                                 RngStream& rng) const {
  const TreeNode& n = tree_->node(static_cast<std::int32_t>(node));
  const std::int32_t e = samplers_[static_cast<std::size_t>(node)].draw(rng);
  const TreeEdge& edge = n.edges[static_cast<std::size_t>(e)];
  return {e, edge.reward, edge.child};
}

double EnumerableTreeModel::node_alpha(Handle node) const {
  return tree_->node(static_cast<std::int32_t>(node)).alpha;
}

bool EnumerableTreeModel::is_leaf(Handle node) const {
  return tree_->node(static_cast<std::int32_t>(node)).is_leaf();
}

double EnumerableTreeModel::leaf_value(Handle node) const {
  return tree_->node(static_cast<std::int32_t>(node)).terminal_value;
}

double global_target_bound(const DecisionTree& t) {
  const double root_alpha = t.node(DecisionTree::root()).alpha;
  const bool want_max =
      t.node(DecisionTree::root()).is_leaf() ? true : root_alpha > 0.0;

  double bound = want_max ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
  struct Item {
    std::int32_t node;
    double total;
  };
  std::vector<Item> stack{{DecisionTree::root(), 0.0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const TreeNode& n = t.node(it.node);
    if (n.is_leaf()) {
      const double v = it.total + n.terminal_value;
      bound = want_max ? std::max(bound, v) : std::min(bound, v);
      continue;
    }
    for (const TreeEdge& e : n.edges) stack.push_back({e.child, it.total + e.reward});
  }
  return bound;
}

namespace {

struct Counters {
  std::uint64_t proposals = 0;
  std::uint64_t base_trials = 0;
  std::int32_t max_depth = 0;
};

// One recursive trial below `node`. Every retry at a level overwrites the
// same buffer slots; the final accepted leaf sets accepted_len, which is what
// delimits the payload (an earlier, deeper exploration may have left stale
// entries past it on ragged trees).
bool sample_rec(const GenerativeTreeModel& model, GenerativeTreeModel::Handle node,
                std::int32_t depth, double u_star, int sigma, RngStream& rng,
                const PathSampleOptions& options, std::vector<std::int32_t>& path,
                std::int32_t& accepted_len, Counters& counters) {
  if (options.on_enter) options.on_enter(depth, u_star, sigma);
  if (depth > counters.max_depth) counters.max_depth = depth;
  if (depth >= model.horizon()) {
    throw std::runtime_error("sample_path: recursion depth exceeds the horizon; malformed tree");
  }

  const auto edge = model.sample_edge(node, rng);
  counters.proposals += 1;
  if (static_cast<std::size_t>(depth) >= path.size()) path.resize(depth + 1);
  path[static_cast<std::size_t>(depth)] = edge.edge_index;

  const double alpha_here = model.node_alpha(node);

  if (model.is_leaf(edge.child)) {
    const double u = rng.next_unit();
    counters.base_trials += 1;
    const double log_p = alpha_here * (edge.reward + model.leaf_value(edge.child) - u_star);
    const bool ok = sigma > 0 ? std::log(u) <= log_p : -std::log(u) >= log_p;
    if (ok) accepted_len = depth + 1;
    return ok;
  }

  const double ratio = alpha_here / model.node_alpha(edge.child);
  if (ratio < 0.0 && !options.allow_mixed_signs) {
    throw std::invalid_argument(
        "sample_path: inverse temperature changes sign along an edge; mixed-sign trees are "
        "experimental, enable allow_mixed_signs to sample them");
  }
  const int child_sigma = ratio < 0.0 ? -sigma : sigma;
  const double xi = std::abs(ratio);
  double int_part = 0.0;
  const double frac = std::modf(xi, &int_part);
  const double child_target = u_star - edge.reward;

  const auto successes = static_cast<std::uint64_t>(int_part);
  for (std::uint64_t i = 0; i < successes; ++i) {
    if (!sample_rec(model, edge.child, depth + 1, child_target, child_sigma, rng, options, path,
                    accepted_len, counters)) {
      return false;
    }
  }
  if (frac == 0.0) return true;  // int_part >= 1 here since xi > 0

  const double f_star = rng.next_unit();
  double b = -1.0;
  double f = 0.0;
  double k = 1.0;
  bool ok = sample_rec(model, edge.child, depth + 1, child_target, child_sigma, rng, options,
                       path, accepted_len, counters);
  while (!ok) {
    b = -b * (frac - k + 1.0) / k;
    f = std::min(f + b, 1.0);
    k += 1.0;
    ok = sample_rec(model, edge.child, depth + 1, child_target, child_sigma, rng, options, path,
                    accepted_len, counters);
    if (f_star <= f) return false;
  }
  return true;
}

TrialReport run_root_trial(const GenerativeTreeModel& model, double u_star, RngStream& rng,
                           const PathSampleOptions& options) {
  if (model.is_leaf(model.root())) {
    throw std::invalid_argument("sample_path: the root is a leaf; nothing to sample");
  }
  Counters counters;
  std::vector<std::int32_t> path;
  std::int32_t accepted_len = 0;
  const bool ok =
      sample_rec(model, model.root(), 0, u_star, +1, rng, options, path, accepted_len, counters);

  TrialReport r;
  r.accepted = ok;
  if (ok) r.payload.assign(path.begin(), path.begin() + accepted_len);
  r.proposals_drawn = counters.proposals;
  r.base_trials = counters.base_trials;
  r.attempts = 1;
  r.trial_depth = static_cast<std::uint32_t>(counters.max_depth);
  return r;
}

void check_path_target(const DecisionTree& t, double u_star) {
  const double root_alpha = t.node(DecisionTree::root()).alpha;
  const double bound = global_target_bound(t);
  if (root_alpha > 0.0 && u_star < bound) {
    throw std::invalid_argument(
        "sample_path: with a risk-neutral or risk-seeking root (alpha > 0) the target must be "
        ">= every path's total value");
  }
  if (root_alpha < 0.0 && u_star > bound) {
    throw std::invalid_argument(
        "sample_path: with an adversarial root (alpha < 0) the target must be <= every path's "
        "total value");
  }
}

}  // namespace

TrialReport sample_path_at(const GenerativeTreeModel& model, GenerativeTreeModel::Handle node,
                           double u_star, int sigma, RngStream& rng,
                           const PathSampleOptions& options) {
  if (sigma != 1 && sigma != -1) {
    throw std::invalid_argument("sample_path_at: sigma must be +1 or -1");
  }
  if (model.is_leaf(node)) {
    throw std::invalid_argument("sample_path_at: node is a leaf; nothing to sample");
  }
  Counters counters;
  std::vector<std::int32_t> path;
  std::int32_t accepted_len = 0;
  const bool ok =
      sample_rec(model, node, 0, u_star, sigma, rng, options, path, accepted_len, counters);

  TrialReport r;
  r.accepted = ok;
  if (ok) r.payload.assign(path.begin(), path.begin() + accepted_len);
  r.proposals_drawn = counters.proposals;
  r.base_trials = counters.base_trials;
  r.attempts = 1;
  r.trial_depth = static_cast<std::uint32_t>(counters.max_depth);
  return r;
}

TrialReport sample_path(const GenerativeTreeModel& model, double u_star, RngStream& rng,
                        const PathSampleOptions& options) {
  return run_root_trial(model, u_star, rng, options);
}

TrialReport sample_path(const DecisionTree& t, double u_star, RngStream& rng,
                        const PathSampleOptions& options) {
  check_path_target(t, u_star);
  EnumerableTreeModel model(t);
  return run_root_trial(model, u_star, rng, options);
}

TrialReport sample_path_until_accept(const GenerativeTreeModel& model, double u_star,
                                     RngStream& rng, std::uint64_t max_attempts,
                                     const PathSampleOptions& options) {
  if (max_attempts < 1) {
    throw std::invalid_argument("sample_path_until_accept: max_attempts must be >= 1");
  }
  TrialReport total;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    const TrialReport r = run_root_trial(model, u_star, rng, options);
    total.proposals_drawn += r.proposals_drawn;
    total.base_trials += r.base_trials;
    total.attempts += 1;
    total.trial_depth = std::max(total.trial_depth, r.trial_depth);
    if (r.accepted) {
      total.accepted = true;
      total.payload = r.payload;
      break;
    }
  }
  return total;
}

TrialReport sample_path_until_accept(const DecisionTree& t, double u_star, RngStream& rng,
                                     std::uint64_t max_attempts,
                                     const PathSampleOptions& options) {
  check_path_target(t, u_star);
  EnumerableTreeModel model(t);
  return sample_path_until_accept(model, u_star, rng, max_attempts, options);
}

TrialReport race_path(const DecisionTree& t, double u_star, const RngStream& base, int workers,
                      std::uint64_t max_rounds, const PathSampleOptions& options) {
  check_path_target(t, u_star);
  if (workers < 1) throw std::invalid_argument("race_path: need at least one worker");
  EnumerableTreeModel model(t);

  std::vector<RngStream> streams;
  streams.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) streams.push_back(base.derive(static_cast<std::uint64_t>(w)));

  TrialReport total;
  for (std::uint64_t round = 0; round < max_rounds; ++round) {
    for (int w = 0; w < workers; ++w) {
      const TrialReport r =
          run_root_trial(model, u_star, streams[static_cast<std::size_t>(w)], options);
      total.proposals_drawn += r.proposals_drawn;
      total.base_trials += r.base_trials;
      total.attempts += 1;
      total.trial_depth = std::max(total.trial_depth, r.trial_depth);
      if (r.accepted) {
        total.accepted = true;
        total.payload = r.payload;
        return total;
      }
    }
  }
  return total;
}

std::string path_label(const DecisionTree& t, const std::vector<std::int32_t>& edge_path) {
  std::string out;
  std::int32_t node = DecisionTree::root();
  for (std::int32_t e : edge_path) {
    const TreeEdge& edge = t.node(node).edges[static_cast<std::size_t>(e)];
    if (!out.empty()) out += '/';
    out += edge.label;
    node = edge.child;
  }
  return out;
}

}  // namespace brplan
