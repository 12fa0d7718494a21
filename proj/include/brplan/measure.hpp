#ifndef BRPLAN_MEASURE_HPP
#define BRPLAN_MEASURE_HPP

#include <cstdint>
#include <vector>

namespace brplan {

/// Indicator vector over the points of a FiniteMeasureSpace.
using PointSet = std::vector<std::uint8_t>;

/// Finite sample space with nonnegative point masses, partitioned into
/// labeled cells (the choice set). Subsets of points play the role of
/// reference and target sets in search-cost arguments.
struct FiniteMeasureSpace {
  std::vector<double> mass;        // per point, nonnegative
  std::vector<std::int32_t> cell;  // point -> cell index in [0, cell_count)
  std::int32_t cell_count = 0;

  std::size_t size() const { return mass.size(); }
  void validate() const;

  PointSet cell_set(std::int32_t c) const;
};

/// Total mass of a subset.
double subset_mass(const FiniteMeasureSpace& space, const PointSet& set);

PointSet intersect(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);

/// P(A|B) = P(A ∩ B) / P(B); requires P(B) > 0.
double conditional_probability(const FiniteMeasureSpace& space, const PointSet& a,
                               const PointSet& b);

/// Decision complexity of specifying target A inside reference B:
/// −(1/α) log P(A|B).
double set_complexity(const FiniteMeasureSpace& space, const PointSet& a, const PointSet& b,
                      double alpha);

}  // namespace brplan

#endif  // BRPLAN_MEASURE_HPP
