#ifndef BRPLAN_PATH_SAMPLER_HPP
#define BRPLAN_PATH_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "brplan/rng.hpp"
#include "brplan/tree.hpp"
#include "brplan/trial.hpp"

namespace brplan {

/// Sampler-only access to a decision tree: enough to propose transitions and
/// score leaves, nothing that would require enumerating the (potentially very
/// large) transition set. Repeated sampling at a node follows its fixed prior;
/// rewards are deterministic per edge.
class GenerativeTreeModel {
 public:
  using Handle = std::int64_t;

  struct EdgeSample {
    std::int32_t edge_index = -1;
    double reward = 0.0;
    Handle child = -1;
  };

  virtual ~GenerativeTreeModel() = default;
  virtual Handle root() const = 0;
  virtual EdgeSample sample_edge(Handle node, RngStream& rng) const = 0;
  virtual double node_alpha(Handle node) const = 0;
  virtual bool is_leaf(Handle node) const = 0;
  virtual double leaf_value(Handle node) const = 0;
  virtual std::int32_t horizon() const = 0;
};

/// Adapter exposing an explicit tree through the generative interface;
/// proposal samplers are prebuilt per node.
class EnumerableTreeModel final : public GenerativeTreeModel {
 public:
  explicit EnumerableTreeModel(const DecisionTree& t);

  Handle root() const override { return DecisionTree::root(); }
  EdgeSample sample_edge(Handle node, RngStream& rng) const override;
  double node_alpha(Handle node) const override;
  bool is_leaf(Handle node) const override;
  double leaf_value(Handle node) const override;
  std::int32_t horizon() const override { return tree_->horizon(); }

  const DecisionTree& tree() const { return *tree_; }

 private:
  const DecisionTree* tree_;
  std::vector<DiscreteSampler> samplers_;
};

/// Tight global target bound for planning on an enumerable tree: the maximum
/// (root alpha > 0) or minimum (root alpha < 0) over root-to-leaf paths of
/// total reward plus terminal value. Generative-only models cannot be scanned;
/// callers must supply their own bound.
double global_target_bound(const DecisionTree& t);

struct PathSampleOptions {
  /// Trees whose temperatures change sign along some edge flip the sampler
  /// into reciprocal acceptance; the accepted-path distribution then has no
  /// verified closed form. Off by default; such trees throw unless enabled.
  bool allow_mixed_signs = false;

  /// Test/diagnostic hook, called on entry to every recursive call with
  /// (depth, remaining target, sign flag).
  std::function<void(std::int32_t, double, int)> on_enter;
};

/// One recursive rejection-sampling trial for the subtree rooted at `node`:
/// propose x ~ Q(·|s); if the child is a leaf, accept sx by the elementary
/// test under α(s) with the remaining target; otherwise require
/// ⌊|α(s)/α(sx)|⌋ recursive successes from the child (target reduced by the
/// edge reward) plus a fractional-remainder stage driven by the power-series
/// coefficient recurrence with ξ_frac = ξ − ⌊ξ⌋. The sign flag σ selects
/// normal (u ≤ p) versus reciprocal (1/u ≥ p) leaf acceptance. Returns the
/// accepted path (edge indices from `node` down) or a failure report.
TrialReport sample_path_at(const GenerativeTreeModel& model, GenerativeTreeModel::Handle node,
                           double u_star, int sigma, RngStream& rng,
                           const PathSampleOptions& options = {});

/// Root-level trial: sample_path_at(root, u_star, +1). For an enumerable tree
/// the target is checked against global_target_bound first.
TrialReport sample_path(const GenerativeTreeModel& model, double u_star, RngStream& rng,
                        const PathSampleOptions& options = {});
TrialReport sample_path(const DecisionTree& t, double u_star, RngStream& rng,
                        const PathSampleOptions& options = {});

/// Repeats root trials until acceptance or max_attempts, aggregating counters.
TrialReport sample_path_until_accept(const GenerativeTreeModel& model, double u_star,
                                     RngStream& rng, std::uint64_t max_attempts,
                                     const PathSampleOptions& options = {});
TrialReport sample_path_until_accept(const DecisionTree& t, double u_star, RngStream& rng,
                                     std::uint64_t max_attempts,
                                     const PathSampleOptions& options = {});

/// Deterministic round-robin race of `workers` independent streams running
/// root trials; earliest acceptance in (round, worker) order wins. Trials are
/// i.i.d., so racing leaves the accepted-path distribution unchanged.
TrialReport race_path(const DecisionTree& t, double u_star, const RngStream& base, int workers,
                      std::uint64_t max_rounds, const PathSampleOptions& options = {});

/// Renders an accepted payload as the '/'-joined edge labels along the path.
std::string path_label(const DecisionTree& t, const std::vector<std::int32_t>& edge_path);

}  // namespace brplan

#endif  // BRPLAN_PATH_SAMPLER_HPP
