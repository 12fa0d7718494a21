#ifndef BRPLAN_KERNELS_HPP
#define BRPLAN_KERNELS_HPP

#include <span>

namespace brplan::kernels {

namespace reference {

/// log Σ exp(args[i]) with a max shift, summed strictly in index order.
/// This is the serial reference; it is also the production path for all
/// per-problem and per-node reductions, whose summation order is part of the
/// output contract.
double log_sum_exp(std::span<const double> args);

}  // namespace reference

namespace parallel {

/// OpenMP log-sum-exp over fixed-size blocks. Block partials are accumulated
/// in block order, so the result is identical for every thread count (it may
/// differ from the strict in-order sum by ordinary rounding, ~1 ulp per block).
double log_sum_exp(std::span<const double> args);

}  // namespace parallel

}  // namespace brplan::kernels

#endif  // BRPLAN_KERNELS_HPP
