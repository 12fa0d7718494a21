#include "brplan/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "brplan/constants.hpp"
#include "brplan/kernels.hpp"

namespace brplan {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<std::int32_t> parents_of(const DecisionTree& t) {
  std::vector<std::int32_t> parent(t.node_count(), -1);
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    for (const TreeEdge& e : t.node(static_cast<std::int32_t>(i)).edges) {
      parent[static_cast<std::size_t>(e.child)] = static_cast<std::int32_t>(i);
    }
  }
  return parent;
}

}  // namespace

std::int32_t DecisionTree::depth(std::int32_t i) const {
  const auto parent = parents_of(*this);
  std::int32_t d = 0;
  while (parent[static_cast<std::size_t>(i)] >= 0) {
    i = parent[static_cast<std::size_t>(i)];
    ++d;
  }
  return d;
}

std::string DecisionTree::node_path(std::int32_t i) const {
  const auto parent = parents_of(*this);
  std::vector<std::string> segs;
  while (parent[static_cast<std::size_t>(i)] >= 0) {
    const TreeNode& p = node(parent[static_cast<std::size_t>(i)]);
    for (const TreeEdge& e : p.edges) {
      if (e.child == i) {
        segs.push_back(e.label);
        break;
      }
    }
    i = parent[static_cast<std::size_t>(i)];
  }
  std::string out;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    if (!out.empty()) out += '/';
    out += *it;
  }
  return out;
}

std::vector<std::int32_t> DecisionTree::preorder() const {
  std::vector<std::int32_t> order;
  order.reserve(node_count());
  std::vector<std::int32_t> stack{root()};
  while (!stack.empty()) {
    const std::int32_t n = stack.back();
    stack.pop_back();
    order.push_back(n);
    const auto& edges = node(n).edges;
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) stack.push_back(it->child);
  }
  return order;
}

std::vector<std::int32_t> DecisionTree::leaves() const {
  std::vector<std::int32_t> out;
  for (std::int32_t n : preorder()) {
    if (node(n).is_leaf()) out.push_back(n);
  }
  return out;
}

std::int32_t TreeBuilder::add_edge(std::int32_t from, std::string label, double prior,
                                   double reward) {
  const std::int32_t child = static_cast<std::int32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_[static_cast<std::size_t>(from)].edges.push_back(
      TreeEdge{std::move(label), prior, reward, child});
  return child;
}

DecisionTree TreeBuilder::finish() { return validate_tree(DecisionTree(horizon_, nodes_)); }

DecisionTree validate_tree(DecisionTree t) {
  if (t.horizon() < 1) throw std::invalid_argument("tree: horizon must be positive");
  if (t.node_count() == 0) throw std::invalid_argument("tree: empty");

  struct Item {
    std::int32_t node;
    std::int32_t depth;
  };
  std::vector<Item> stack{{DecisionTree::root(), 0}};
  std::vector<std::uint8_t> seen(t.node_count(), 0);
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(it.node)]++) {
      throw std::invalid_argument("tree: node reached twice; not a tree");
    }
    TreeNode& n = t.node(it.node);
    if (n.is_leaf()) {
      if (!std::isfinite(n.terminal_value)) {
        throw std::invalid_argument("tree: non-finite terminal value at node '" +
                                    t.node_path(it.node) + "'");
      }
      continue;
    }
    if (it.depth >= t.horizon()) {
      throw std::invalid_argument("tree: internal node '" + t.node_path(it.node) +
                                  "' at depth " + std::to_string(it.depth) +
                                  " exceeds horizon " + std::to_string(t.horizon()));
    }
    if (n.alpha == 0.0 || !std::isfinite(n.alpha)) {
      throw std::invalid_argument("tree: node '" + t.node_path(it.node) +
                                  "' must have a nonzero finite inverse temperature");
    }
    std::stable_sort(n.edges.begin(), n.edges.end(),
                     [](const TreeEdge& a, const TreeEdge& b) { return a.label < b.label; });
    std::unordered_set<std::string> labels;
    double mass = 0.0;
    for (const TreeEdge& e : n.edges) {
      if (!labels.insert(e.label).second) {
        throw std::invalid_argument("tree: duplicate edge label '" + e.label + "' at node '" +
                                    t.node_path(it.node) + "'");
      }
      if (!(e.prior >= 0.0) || !std::isfinite(e.prior)) {
        throw std::invalid_argument("tree: negative or non-finite edge prior at node '" +
                                    t.node_path(it.node) + "'");
      }
      if (!std::isfinite(e.reward)) {
        throw std::invalid_argument("tree: non-finite reward at node '" +
                                    t.node_path(it.node) + "'");
      }
      if (e.child < 0 || e.child >= static_cast<std::int32_t>(t.node_count())) {
        throw std::invalid_argument("tree: dangling child reference at node '" +
                                    t.node_path(it.node) + "'");
      }
      mass += e.prior;
    }
    if (std::abs(mass - 1.0) > kMassTol) {
      throw std::invalid_argument("tree: edge priors at node '" + t.node_path(it.node) +
                                  "' sum to " + std::to_string(mass) +
                                  ", expected 1 within 1e-12");
    }
    for (const TreeEdge& e : n.edges) stack.push_back({e.child, it.depth + 1});
  }
  return t;
}

TreeSolution backward_induction(const DecisionTree& t) {
  TreeSolution sol;
  sol.node_values.assign(t.node_count(), 0.0);
  sol.node_policies.assign(t.node_count(), {});

  const auto order = t.preorder();
  // Children first: preorder reversed is a valid post-order for trees.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::int32_t ni = *it;
    const TreeNode& n = t.node(ni);
    if (n.is_leaf()) {
      sol.node_values[static_cast<std::size_t>(ni)] = n.terminal_value;
      continue;
    }
    std::vector<double> logw(n.edges.size());
    for (std::size_t e = 0; e < n.edges.size(); ++e) {
      const TreeEdge& edge = n.edges[e];
      const double total =
          edge.reward + sol.node_values[static_cast<std::size_t>(edge.child)];
      logw[e] = edge.prior > 0.0 ? std::log(edge.prior) + n.alpha * total : kNegInf;
    }
    const double lse = kernels::reference::log_sum_exp(logw);
    sol.node_values[static_cast<std::size_t>(ni)] = lse / n.alpha;

    std::vector<double> row(n.edges.size(), 0.0);
    double m = kNegInf;
    for (double v : logw)
      if (v > m) m = v;
    double sum = 0.0;
    for (std::size_t e = 0; e < row.size(); ++e) {
      row[e] = logw[e] == kNegInf ? 0.0 : std::exp(logw[e] - m);
      sum += row[e];
    }
    for (double& v : row) v /= sum;
    sol.node_policies[static_cast<std::size_t>(ni)] = std::move(row);
  }
  return sol;
}

Distribution node_policy_distribution(const DecisionTree& t, const TreeSolution& solution,
                                      std::int32_t node) {
  const TreeNode& n = t.node(node);
  if (n.is_leaf()) {
    throw std::invalid_argument("node_policy_distribution: leaves carry no transition table");
  }
  Labels labels;
  labels.reserve(n.edges.size());
  for (const TreeEdge& e : n.edges) labels.push_back(e.label);
  return Distribution(make_labels(std::move(labels)),
                      solution.node_policies[static_cast<std::size_t>(node)]);
}

namespace {

void check_policy_shape(const DecisionTree& t, const std::vector<std::vector<double>>& policy) {
  if (policy.size() != t.node_count()) {
    throw std::invalid_argument("tree policy: need one row per node (empty rows for leaves)");
  }
  for (std::size_t ni = 0; ni < t.node_count(); ++ni) {
    const TreeNode& n = t.node(static_cast<std::int32_t>(ni));
    if (n.is_leaf()) continue;
    const auto& row = policy[ni];
    if (row.size() != n.edges.size()) {
      throw std::invalid_argument("tree policy: row size mismatch at node '" +
                                  t.node_path(static_cast<std::int32_t>(ni)) + "'");
    }
    double mass = 0.0;
    for (std::size_t e = 0; e < row.size(); ++e) {
      if (!(row[e] >= 0.0) || !std::isfinite(row[e])) {
        throw std::invalid_argument("tree policy: negative entry at node '" +
                                    t.node_path(static_cast<std::int32_t>(ni)) + "'");
      }
      if (row[e] > 0.0 && n.edges[e].prior == 0.0) {
        throw std::invalid_argument("tree policy: mass outside the prior's support at node '" +
                                    t.node_path(static_cast<std::int32_t>(ni)) + "' edge '" +
                                    n.edges[e].label + "'");
      }
      mass += row[e];
    }
    if (std::abs(mass - 1.0) > kMassTol) {
      throw std::invalid_argument("tree policy: row at node '" +
                                  t.node_path(static_cast<std::int32_t>(ni)) + "' sums to " +
                                  std::to_string(mass));
    }
  }
}

double free_energy_below(const DecisionTree& t, const std::vector<std::vector<double>>& policy,
                         std::int32_t ni) {
  const TreeNode& n = t.node(ni);
  if (n.is_leaf()) return n.terminal_value;
  const auto& row = policy[static_cast<std::size_t>(ni)];
  double acc = 0.0;
  for (std::size_t e = 0; e < n.edges.size(); ++e) {
    const double pe = row[e];
    if (pe == 0.0) continue;
    const TreeEdge& edge = n.edges[e];
    acc += pe * (edge.reward - std::log(pe / edge.prior) / n.alpha +
                 free_energy_below(t, policy, edge.child));
  }
  return acc;
}

}  // namespace

double tree_free_energy(const DecisionTree& t, const std::vector<std::vector<double>>& policy) {
  check_policy_shape(t, policy);
  return free_energy_below(t, policy, DecisionTree::root());
}

std::vector<double> path_log_masses(const DecisionTree& t,
                                    const std::vector<std::vector<double>>& policy) {
  check_policy_shape(t, policy);
  std::vector<double> out;
  struct Item {
    std::int32_t node;
    double log_mass;
  };
  std::vector<Item> stack{{DecisionTree::root(), 0.0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const TreeNode& n = t.node(it.node);
    if (n.is_leaf()) {
      out.push_back(it.log_mass);
      continue;
    }
    const auto& row = policy[static_cast<std::size_t>(it.node)];
    for (std::size_t e = n.edges.size(); e-- > 0;) {
      const double pe = row[e];
      stack.push_back({n.edges[e].child, pe > 0.0 ? it.log_mass + std::log(pe) : kNegInf});
    }
  }
  return out;
}

Distribution path_distribution(const DecisionTree& t,
                               const std::vector<std::vector<double>>& policy) {
  check_policy_shape(t, policy);
  Labels labels;
  std::vector<double> mass;
  struct Item {
    std::int32_t node;
    double prob;
    std::string path;
  };
  std::vector<Item> stack{{DecisionTree::root(), 1.0, ""}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const TreeNode& n = t.node(it.node);
    if (n.is_leaf()) {
      labels.push_back(std::move(it.path));
      mass.push_back(it.prob);
      continue;
    }
    const auto& row = policy[static_cast<std::size_t>(it.node)];
    for (std::size_t e = n.edges.size(); e-- > 0;) {
      const TreeEdge& edge = n.edges[e];
      std::string path = it.path.empty() ? edge.label : it.path + "/" + edge.label;
      stack.push_back({edge.child, it.prob * row[e], std::move(path)});
    }
  }
  return Distribution(make_labels(std::move(labels)), std::move(mass));
}

}  // namespace brplan
