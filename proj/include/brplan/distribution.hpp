#ifndef BRPLAN_DISTRIBUTION_HPP
#define BRPLAN_DISTRIBUTION_HPP

#include <memory>
#include <string>
#include <vector>

namespace brplan {

/// Outcome labels shared between a problem and the distributions derived from
/// it, so alignment is by construction and copies are cheap.
using Labels = std::vector<std::string>;
using LabelsPtr = std::shared_ptr<const Labels>;

LabelsPtr make_labels(Labels labels);

/// Numbered labels "x0".."x{n-1}".
LabelsPtr numbered_labels(std::size_t n, const std::string& prefix = "x");

/// Finite probability table over labeled outcomes.
class Distribution {
 public:
  Distribution() = default;
  Distribution(LabelsPtr labels, std::vector<double> mass);

  std::size_t size() const { return mass_.size(); }
  const Labels& labels() const { return *labels_; }
  const LabelsPtr& labels_ptr() const { return labels_; }
  const std::vector<double>& mass() const { return mass_; }
  double operator[](std::size_t i) const { return mass_[i]; }

  double mass_sum() const;

  /// Throws std::invalid_argument naming the failed invariant: a negative or
  /// non-finite entry, a mass sum off by more than kMassTol, a duplicate
  /// label, or a label/mass length mismatch.
  void validate() const;

 private:
  LabelsPtr labels_;
  std::vector<double> mass_;
};

Distribution uniform_distribution(LabelsPtr labels);

/// Total variation distance between two distributions over the same ordered
/// outcome set: half the L1 distance of their mass vectors.
double total_variation(const Distribution& a, const Distribution& b);
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace brplan

#endif  // BRPLAN_DISTRIBUTION_HPP
