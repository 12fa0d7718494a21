#ifndef BRPLAN_EQUIVALENCE_HPP
#define BRPLAN_EQUIVALENCE_HPP

#include <cstdint>
#include <functional>
#include <string_view>

#include "brplan/problem.hpp"
#include "brplan/tree.hpp"

namespace brplan {

/// Decomposition of the temperature ratio ξ = α/β used by the sampling stack:
/// sign, integer part ⌊|ξ|⌋, and fractional remainder in [0,1).
struct ExponentSpec {
  double xi = 1.0;
  int sign = 1;
  std::uint64_t integer_part = 1;
  double fractional_part = 0.0;
};

ExponentSpec exponent_spec(double alpha, double beta);

/// Rescales a problem to inverse temperature beta without changing its Gibbs
/// posterior or certainty-equivalent:
///   V(x) = (α/β) U(x) + (1/α − 1/β) log Z_α.
/// The target, when present, is converted by the same affine map.
SingleStepProblem equivalent_problem(const SingleStepProblem& p, double beta);

/// Target conversion between equivalent problems,
///   V* = (α/β) U* + (1/α − 1/β) log Z_α,
/// which keeps the rejection-sampling success probability unchanged:
/// Z_α / e^{α U*} = Z_β / e^{β V*}.
double equivalent_target(double u_star, double alpha, double beta, double log_z_alpha);

/// Rewrites a tree to new per-node inverse temperatures while preserving every
/// node's optimal transition table and certainty-equivalent: backward
/// induction supplies the child values F(sx); each internal node's utilities
/// R(x|s)+F(sx) are rescaled around the node's certainty-equivalent and the
/// child values subtracted back out to give the new rewards. Requires an
/// enumerable tree (values must exist) and nonzero temperatures throughout.
DecisionTree equivalent_tree(const DecisionTree& t,
                             const std::function<double(std::string_view path)>& new_alpha);

/// Uniform-temperature convenience overload.
DecisionTree equivalent_tree(const DecisionTree& t, double beta);

}  // namespace brplan

#endif  // BRPLAN_EQUIVALENCE_HPP
