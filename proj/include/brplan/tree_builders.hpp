#ifndef BRPLAN_TREE_BUILDERS_HPP
#define BRPLAN_TREE_BUILDERS_HPP

#include <string>
#include <vector>

#include "brplan/tree.hpp"

namespace brplan {

enum class NodeRole { max_node, chance_node, min_node };
enum class ClassicalRule { expectimax, minimax, expectiminimax };

/// Skeleton of a classical game tree: internal nodes carry a role, leaves a
/// value. Priors default to uniform; labels default to "1", "2", ...
struct ClassicalNode {
  NodeRole role = NodeRole::max_node;
  double value = 0.0;                  // leaves only
  std::vector<ClassicalNode> children;
  std::vector<double> priors;          // optional, chance nodes
  std::vector<std::string> labels;     // optional

  bool is_leaf() const { return children.empty(); }
};

/// Exact classical value of a skeleton: max / expectation / min per role.
/// This is the reference the bounded-rational approximation is tested against.
double classical_value(const ClassicalNode& skeleton);

/// Bounded-rational approximation of a classical tree: max roles get
/// α = +magnitude, min roles α = −magnitude, chance roles the fixed small
/// positive kChanceAlpha. All rewards are zero; leaf values become terminal
/// certainty-equivalents. The rule restricts which roles may appear
/// (expectimax: max+chance, minimax: max+min, expectiminimax: all three).
DecisionTree classical_tree(ClassicalRule rule, const ClassicalNode& skeleton,
                            double magnitude);

enum class BallColor { black, white };

/// Two-urn betting tree: an adversarially weighted composition node over the
/// 101 possible black-ball counts of the unknown urn, a bet node choosing the
/// known (left, 50/50) or unknown (right) urn, and a draw node paying 1 utile
/// when the drawn ball has the winning color. Labels: "000".."100" for the
/// composition, "left"/"right" for the bet, "black"/"white" for the draw.
/// Requires theta_alpha < 0 < bet_alpha and draw_alpha > 0.
DecisionTree build_ellsberg_tree(double theta_alpha, double bet_alpha, double draw_alpha,
                                 BallColor winning_color);

struct EllsbergReport {
  double p_left = 0.0;   // marginal probability of betting on the known urn
  double p_right = 0.0;
  double expected_theta = 0.0;             // E[black-ball count]/100 under the tilted weights
  double expected_winning_fraction = 0.0;  // E[winning-color fraction of the unknown urn]
};

/// Solves the tree exactly and aggregates the bet-node policy over the
/// composition node's tilted weights.
EllsbergReport solve_ellsberg(const DecisionTree& ellsberg_tree);

}  // namespace brplan

#endif  // BRPLAN_TREE_BUILDERS_HPP
