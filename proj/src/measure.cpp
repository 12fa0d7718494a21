#include "brplan/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "brplan/core.hpp"

namespace brplan {

void FiniteMeasureSpace::validate() const {
  if (mass.size() != cell.size()) {
    throw std::invalid_argument("measure space: mass/cell size mismatch");
  }
  for (double m : mass) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("measure space: negative or non-finite point mass");
    }
  }
  for (std::int32_t c : cell) {
    if (c < 0 || c >= cell_count) {
      throw std::invalid_argument("measure space: cell index out of range");
    }
  }
}

PointSet FiniteMeasureSpace::cell_set(std::int32_t c) const {
  PointSet s(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) s[i] = (cell[i] == c) ? 1 : 0;
  return s;
}

double subset_mass(const FiniteMeasureSpace& space, const PointSet& set) {
  if (set.size() != space.size()) throw std::invalid_argument("subset_mass: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i]) s += space.mass[i];
  }
  return s;
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) throw std::invalid_argument("intersect: size mismatch");
  PointSet out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] && b[i]) ? 1 : 0;
  return out;
}

bool is_subset(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) throw std::invalid_argument("is_subset: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

double conditional_probability(const FiniteMeasureSpace& space, const PointSet& a,
                               const PointSet& b) {
  const double pb = subset_mass(space, b);
  if (!(pb > 0.0)) {
    throw std::invalid_argument("conditional_probability: reference set has zero mass");
  }
  return subset_mass(space, intersect(a, b)) / pb;
}

double set_complexity(const FiniteMeasureSpace& space, const PointSet& a, const PointSet& b,
                      double alpha) {
  // Summation rounding can push P(A|B) a few ulp past 1 for near-equal
  // nested sets; the true conditional never exceeds 1.
  const double p = std::min(conditional_probability(space, a, b), 1.0);
  return decision_complexity(p, alpha);
}

}  // namespace brplan
