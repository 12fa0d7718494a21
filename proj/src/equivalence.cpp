#include "brplan/equivalence.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brplan/core.hpp"

namespace brplan {

ExponentSpec exponent_spec(double alpha, double beta) {
  if (alpha == 0.0 || beta == 0.0) {
    throw std::invalid_argument("exponent_spec: temperatures must be nonzero");
  }
  ExponentSpec s;
  s.xi = alpha / beta;
  s.sign = s.xi > 0.0 ? 1 : -1;
  double int_part = 0.0;
  s.fractional_part = std::modf(std::abs(s.xi), &int_part);
  s.integer_part = static_cast<std::uint64_t>(int_part);
  return s;
}

SingleStepProblem equivalent_problem(const SingleStepProblem& p, double beta) {
  if (beta == 0.0) throw std::invalid_argument("equivalent_problem: beta must be nonzero");
  const double log_z = log_partition(p);  // validates, requires alpha != 0
  const double scale = p.alpha / beta;
  const double offset = (1.0 / p.alpha - 1.0 / beta) * log_z;

  SingleStepProblem out = p;
  out.alpha = beta;
  for (double& u : out.utility) u = scale * u + offset;
  if (p.target) out.target = equivalent_target(*p.target, p.alpha, beta, log_z);
  return out;
}

double equivalent_target(double u_star, double alpha, double beta, double log_z_alpha) {
  if (alpha == 0.0 || beta == 0.0) {
    throw std::invalid_argument("equivalent_target: temperatures must be nonzero");
  }
  return (alpha / beta) * u_star + (1.0 / alpha - 1.0 / beta) * log_z_alpha;
}

DecisionTree equivalent_tree(const DecisionTree& t,
                             const std::function<double(std::string_view)>& new_alpha) {
  const TreeSolution sol = backward_induction(t);

  DecisionTree out = t;
  struct Item {
    std::int32_t node;
    std::string path;
  };
  std::vector<Item> stack{{DecisionTree::root(), ""}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    TreeNode& n = out.node(it.node);
    if (n.is_leaf()) continue;  // terminal values carry over unchanged

    const double beta = new_alpha(it.path);
    if (beta == 0.0 || !std::isfinite(beta)) {
      throw std::invalid_argument("equivalent_tree: new temperature at node '" + it.path +
                                  "' must be nonzero and finite");
    }
    const double alpha = n.alpha;
    const double node_ce = sol.node_values[static_cast<std::size_t>(it.node)];
    // V(x) = (α/β)(R+F(sx)) + (1/α − 1/β)·α·F(s); log Z at the node is α·F(s).
    const double scale = alpha / beta;
    const double offset = (1.0 / alpha - 1.0 / beta) * (alpha * node_ce);

    n.alpha = beta;
    for (TreeEdge& e : n.edges) {
      const double child_value = sol.node_values[static_cast<std::size_t>(e.child)];
      const double v = scale * (e.reward + child_value) + offset;
      e.reward = v - child_value;
      std::string path = it.path.empty() ? e.label : it.path + "/" + e.label;
      stack.push_back({e.child, std::move(path)});
    }
  }
  return out;
}

DecisionTree equivalent_tree(const DecisionTree& t, double beta) {
  return equivalent_tree(t, [beta](std::string_view) { return beta; });
}

}  // namespace brplan
