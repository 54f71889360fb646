#pragma once

#include <vector>

#include "sasaki/model.hpp"

namespace sasaki {

/// Coordinates of a curve sampled on a uniform arc-length grid.
struct SampledCurve {
  int n = 1;
  std::vector<double> s;
  std::vector<CoordPoint> points;

  std::size_t size() const noexcept { return s.size(); }
  /// Mean grid spacing (0 for fewer than two samples).
  double spacing() const noexcept;
};

/// Throws NonUniformSpacing unless s is strictly increasing with every step
/// within rel_tol of the mean step, and DimensionMismatch if a point does not
/// match n.
void validate_uniform(const SampledCurve& c, double rel_tol = 1e-9);

}  // namespace sasaki
