#include "brplan/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace brplan::kernels {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double max_of(std::span<const double> args) {
  double m = kNegInf;
  for (double a : args) {
    if (std::isnan(a)) throw std::invalid_argument("log_sum_exp: NaN argument");
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

namespace reference {

double log_sum_exp(std::span<const double> args) {
  if (args.empty()) return kNegInf;
  const double m = max_of(args);
  if (m == kNegInf) return kNegInf;  // all terms vanish
  double sum = 0.0;
  for (double a : args) sum += std::exp(a - m);
  return m + std::log(sum);
}

}  // namespace reference

namespace parallel {

double log_sum_exp(std::span<const double> args) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t n = args.size();
  if (n <= kBlock) return reference::log_sum_exp(args);

  const std::size_t blocks = (n + kBlock - 1) / kBlock;

  double m = kNegInf;
  bool saw_nan = false;
#pragma omp parallel for reduction(max : m) reduction(|| : saw_nan) schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    const double a = args[static_cast<std::size_t>(i)];
    saw_nan = saw_nan || std::isnan(a);
    if (a > m) m = a;
  }
  if (saw_nan) throw std::invalid_argument("log_sum_exp: NaN argument");
  if (m == kNegInf) return kNegInf;

  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(lo + kBlock, n);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += std::exp(args[i] - m);
    partial[static_cast<std::size_t>(b)] = s;
  }

  // Combine in block order: thread-count invariant.
  double sum = 0.0;
  for (double s : partial) sum += s;
  return m + std::log(sum);
}

}  // namespace parallel

}  // namespace brplan::kernels
