#ifndef BRPLAN_TREE_HPP
#define BRPLAN_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brplan/distribution.hpp"

namespace brplan {

struct TreeEdge {
  std::string label;
  double prior = 0.0;   // Q(x|s)
  double reward = 0.0;  // R(x|s)
  std::int32_t child = -1;
};

struct TreeNode {
  double alpha = 1.0;           // inverse temperature, internal nodes only
  double terminal_value = 0.0;  // F(s), leaves only
  std::vector<TreeEdge> edges;  // empty => leaf

  bool is_leaf() const { return edges.empty(); }
};

/// Finite-horizon bounded-rational decision tree: per-node inverse
/// temperatures, per-edge priors and rewards, terminal certainty-equivalents
/// at the leaves. Nodes live in an arena; node 0 is the root.
class DecisionTree {
 public:
  DecisionTree() = default;
  DecisionTree(std::int32_t horizon, std::vector<TreeNode> nodes)
      : horizon_(horizon), nodes_(std::move(nodes)) {}

  std::int32_t horizon() const { return horizon_; }
  std::size_t node_count() const { return nodes_.size(); }
  const TreeNode& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
  TreeNode& node(std::int32_t i) { return nodes_[static_cast<std::size_t>(i)]; }
  static constexpr std::int32_t root() { return 0; }

  std::int32_t depth(std::int32_t i) const;

  /// Root-to-node edge labels joined with '/'; the root is "".
  std::string node_path(std::int32_t i) const;

  /// Nodes in depth-first preorder, children in edge order. After
  /// validate_tree this equals lexicographic order of node paths
  /// (segment-wise), which is the ordering used for CSV output.
  std::vector<std::int32_t> preorder() const;

  /// Leaves in depth-first preorder.
  std::vector<std::int32_t> leaves() const;

 private:
  std::int32_t horizon_ = 1;
  std::vector<TreeNode> nodes_;
};

/// Builder for hand-constructed trees; finish() runs validate_tree.
class TreeBuilder {
 public:
  explicit TreeBuilder(std::int32_t horizon) : horizon_(horizon) {
    nodes_.emplace_back();  // root
  }

  std::int32_t root() const { return 0; }
  void set_alpha(std::int32_t node, double alpha) { nodes_[node].alpha = alpha; }
  void set_terminal_value(std::int32_t node, double f) { nodes_[node].terminal_value = f; }

  /// Appends an edge and returns the new child's id.
  std::int32_t add_edge(std::int32_t from, std::string label, double prior, double reward);

  DecisionTree finish();

 private:
  std::int32_t horizon_;
  std::vector<TreeNode> nodes_;
};

/// Checks edge-prior normalization per node (within 1e-12), nonzero alpha at
/// internal nodes, unique edge labels per node, depth within the horizon, and
/// finiteness; sorts each node's edges by label so traversal order is
/// canonical. Throws std::invalid_argument annotated with the node path.
DecisionTree validate_tree(DecisionTree t);

/// Per-node certainty-equivalents and optimal transition tables from backward
/// induction.
struct TreeSolution {
  std::vector<double> node_values;                 // F(s), all nodes
  std::vector<std::vector<double>> node_policies;  // P(x|s), internal nodes (empty for leaves)
};

/// Post-order sweep: leaves keep their terminal value; each internal node gets
///   F(s) = (1/α(s)) log Σ_x Q(x|s) e^{α(s) [R(x|s) + F(sx)]}
/// and the matching Gibbs transition table. Per-node sums run in edge order.
TreeSolution backward_induction(const DecisionTree& t);

/// One internal node's optimal transition table as a labeled distribution
/// over its edge labels.
Distribution node_policy_distribution(const DecisionTree& t, const TreeSolution& solution,
                                      std::int32_t node);

/// Free energy of an arbitrary per-node policy (rows aligned to each node's
/// edge order), by the recursion
///   F[P~](s) = Σ_x P~(x|s) [ R(x|s) − (1/α(s)) log(P~(x|s)/Q(x|s)) + F[P~](sx) ].
/// Rows must be absolutely continuous w.r.t. the edge priors.
double tree_free_energy(const DecisionTree& t, const std::vector<std::vector<double>>& policy);

/// Distribution over root-to-leaf paths induced by a per-node policy: the
/// product of the policy masses along each path. Labels are '/'-joined paths.
Distribution path_distribution(const DecisionTree& t,
                               const std::vector<std::vector<double>>& policy);

/// Exact log-mass of each root-to-leaf path under a per-node policy, in leaf
/// preorder (masses of path_distribution without the exp).
std::vector<double> path_log_masses(const DecisionTree& t,
                                    const std::vector<std::vector<double>>& policy);

}  // namespace brplan

#endif  // BRPLAN_TREE_HPP
