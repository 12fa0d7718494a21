#include "brplan/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "brplan/constants.hpp"

namespace brplan {

LabelsPtr make_labels(Labels labels) {
  return std::make_shared<const Labels>(std::move(labels));
}

LabelsPtr numbered_labels(std::size_t n, const std::string& prefix) {
  Labels out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return make_labels(std::move(out));
}

Distribution::Distribution(LabelsPtr labels, std::vector<double> mass)
    : labels_(std::move(labels)), mass_(std::move(mass)) {
  if (!labels_) labels_ = numbered_labels(mass_.size());
}

double Distribution::mass_sum() const {
  // Neumaier-compensated: the check below is about the mathematical sum, and
  // a plain serial sum of 1e5+ equal masses already drifts past 1e-12.
  double sum = 0.0;
  double comp = 0.0;
  for (double m : mass_) {
    const double t = sum + m;
    if (std::abs(sum) >= std::abs(m)) {
      comp += (sum - t) + m;
    } else {
      comp += (m - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

void Distribution::validate() const {
  if (labels_->size() != mass_.size()) {
    throw std::invalid_argument("distribution: " + std::to_string(labels_->size()) +
                                " labels for " + std::to_string(mass_.size()) + " masses");
  }
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (!(mass_[i] >= 0.0) || !std::isfinite(mass_[i])) {
      throw std::invalid_argument("distribution: negative or non-finite mass at outcome '" +
                                  (*labels_)[i] + "'");
    }
  }
  const double s = mass_sum();
  if (std::abs(s - 1.0) > kMassTol) {
    throw std::invalid_argument("distribution: mass sums to " + std::to_string(s) +
                                ", expected 1 within 1e-12");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : *labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("distribution: duplicate outcome identifier '" + l + "'");
    }
  }
}

Distribution uniform_distribution(LabelsPtr labels) {
  const std::size_t n = labels->size();
  if (n == 0) throw std::invalid_argument("uniform_distribution: empty outcome set");
  return Distribution(std::move(labels), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("total_variation: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

double total_variation(const Distribution& a, const Distribution& b) {
  return total_variation(a.mass(), b.mass());
}

}  // namespace brplan
