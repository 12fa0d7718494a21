#include "brplan/tree_builders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "brplan/constants.hpp"

namespace brplan {

namespace {

double role_alpha(NodeRole role, double magnitude) {
  switch (role) {
    case NodeRole::max_node:
      return magnitude;
    case NodeRole::min_node:
      return -magnitude;
    case NodeRole::chance_node:
      return kChanceAlpha;
  }
  throw std::logic_error("unreachable");
}

bool role_allowed(ClassicalRule rule, NodeRole role) {
  switch (rule) {
    case ClassicalRule::expectimax:
      return role != NodeRole::min_node;
    case ClassicalRule::minimax:
      return role != NodeRole::chance_node;
    case ClassicalRule::expectiminimax:
      return true;
  }
  return false;
}

std::vector<double> node_priors(const ClassicalNode& n) {
  if (!n.priors.empty()) {
    if (n.priors.size() != n.children.size()) {
      throw std::invalid_argument("classical skeleton: priors/children size mismatch");
    }
    return n.priors;
  }
  return std::vector<double>(n.children.size(), 1.0 / static_cast<double>(n.children.size()));
}

std::string edge_label(const ClassicalNode& n, std::size_t i) {
  if (!n.labels.empty()) {
    if (n.labels.size() != n.children.size()) {
      throw std::invalid_argument("classical skeleton: labels/children size mismatch");
    }
    return n.labels[i];
  }
  return std::to_string(i + 1);
}

int skeleton_depth(const ClassicalNode& n) {
  if (n.is_leaf()) return 0;
  int d = 0;
  for (const auto& c : n.children) d = std::max(d, skeleton_depth(c));
  return d + 1;
}

void build_classical(TreeBuilder& b, std::int32_t at, const ClassicalNode& n,
                     ClassicalRule rule, double magnitude) {
  if (n.is_leaf()) {
    b.set_terminal_value(at, n.value);
    return;
  }
  if (!role_allowed(rule, n.role)) {
    throw std::invalid_argument("classical skeleton: node role not allowed by the chosen rule");
  }
  b.set_alpha(at, role_alpha(n.role, magnitude));
  const auto priors = node_priors(n);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    const std::int32_t child = b.add_edge(at, edge_label(n, i), priors[i], 0.0);
    build_classical(b, child, n.children[i], rule, magnitude);
  }
}

}  // namespace

double classical_value(const ClassicalNode& n) {
  if (n.is_leaf()) return n.value;
  const auto priors = node_priors(n);
  switch (n.role) {
    case NodeRole::max_node: {
      double v = -std::numeric_limits<double>::infinity();
      for (const auto& c : n.children) v = std::max(v, classical_value(c));
      return v;
    }
    case NodeRole::min_node: {
      double v = std::numeric_limits<double>::infinity();
      for (const auto& c : n.children) v = std::min(v, classical_value(c));
      return v;
    }
    case NodeRole::chance_node: {
      double v = 0.0;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        v += priors[i] * classical_value(n.children[i]);
      }
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

DecisionTree classical_tree(ClassicalRule rule, const ClassicalNode& skeleton,
                            double magnitude) {
  if (!(magnitude > 0.0)) {
    throw std::invalid_argument("classical_tree: magnitude must be positive");
  }
  if (skeleton.is_leaf()) {
    throw std::invalid_argument("classical_tree: skeleton root must be internal");
  }
  TreeBuilder b(skeleton_depth(skeleton));
  build_classical(b, b.root(), skeleton, rule, magnitude);
  return b.finish();
}

DecisionTree build_ellsberg_tree(double theta_alpha, double bet_alpha, double draw_alpha,
                                 BallColor winning_color) {
  if (!(theta_alpha < 0.0)) throw std::invalid_argument("ellsberg: theta alpha must be < 0");
  if (!(bet_alpha > 0.0)) throw std::invalid_argument("ellsberg: bet alpha must be > 0");
  if (!(draw_alpha > 0.0)) throw std::invalid_argument("ellsberg: draw alpha must be > 0");

  TreeBuilder b(3);
  b.set_alpha(b.root(), theta_alpha);
  for (int theta = 0; theta <= 100; ++theta) {
    std::string label = std::to_string(theta);
    label.insert(0, 3 - label.size(), '0');  // "000".."100" keeps label order numeric
    const std::int32_t bet = b.add_edge(b.root(), label, 1.0 / 101.0, 0.0);
    b.set_alpha(bet, bet_alpha);

    const double black_frac = static_cast<double>(theta) / 100.0;
    const double win_left = 0.5;
    const double win_right = winning_color == BallColor::black ? black_frac : 1.0 - black_frac;

    const std::int32_t left = b.add_edge(bet, "left", 0.5, 0.0);
    const std::int32_t right = b.add_edge(bet, "right", 0.5, 0.0);
    for (auto [color_node, win_prob] : {std::pair{left, win_left}, std::pair{right, win_right}}) {
      b.set_alpha(color_node, draw_alpha);
      const bool black_wins = winning_color == BallColor::black;
      b.add_edge(color_node, "black", black_wins ? win_prob : 1.0 - win_prob,
                 black_wins ? 1.0 : 0.0);
      b.add_edge(color_node, "white", black_wins ? 1.0 - win_prob : win_prob,
                 black_wins ? 0.0 : 1.0);
    }
  }
  return b.finish();
}

EllsbergReport solve_ellsberg(const DecisionTree& t) {
  const TreeSolution sol = backward_induction(t);
  const TreeNode& root = t.node(DecisionTree::root());
  const auto& theta_weights = sol.node_policies[DecisionTree::root()];

  EllsbergReport rep;
  for (std::size_t i = 0; i < root.edges.size(); ++i) {
    const std::int32_t bet = root.edges[i].child;
    const TreeNode& bet_node = t.node(bet);
    const auto& bet_row = sol.node_policies[static_cast<std::size_t>(bet)];

    double p_left = 0.0;
    double win_fraction = 0.0;
    for (std::size_t e = 0; e < bet_node.edges.size(); ++e) {
      if (bet_node.edges[e].label == "left") {
        p_left = bet_row[e];
      } else {
        // Winning fraction of the unknown urn = prior of its rewarded edge.
        const TreeNode& color = t.node(bet_node.edges[e].child);
        for (const TreeEdge& ce : color.edges) {
          if (ce.reward > 0.0) win_fraction = ce.prior;
        }
      }
    }
    const double w = theta_weights[i];
    rep.p_left += w * p_left;
    rep.expected_theta += w * (static_cast<double>(std::stoi(root.edges[i].label)) / 100.0);
    rep.expected_winning_fraction += w * win_fraction;
  }
  rep.p_right = 1.0 - rep.p_left;
  return rep;
}

}  // namespace brplan
