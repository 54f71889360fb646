#include "sasaki/sampled_curve.hpp"

#include <cmath>
#include <string>

#include "sasaki/errors.hpp"

namespace sasaki {

double SampledCurve::spacing() const noexcept {
  if (s.size() < 2) return 0.0;
  return (s.back() - s.front()) / static_cast<double>(s.size() - 1);
}

void validate_uniform(const SampledCurve& c, double rel_tol) {
  if (c.points.size() != c.s.size()) {
    throw Error(ErrorCode::MalformedInput, "s and points have different lengths");
  }
  for (const auto& p : c.points) {
    if (p.x.size() != static_cast<std::size_t>(c.n) || p.y.size() != static_cast<std::size_t>(c.n)) {
      throw Error(ErrorCode::DimensionMismatch, "sample point does not match n");
    }
  }
  if (c.s.size() < 2) return;
  const double h = c.spacing();
  if (!(h > 0.0)) throw Error(ErrorCode::NonUniformSpacing, "s must be strictly increasing");
  for (std::size_t i = 1; i < c.s.size(); ++i) {
    const double step = c.s[i] - c.s[i - 1];
    if (std::abs(step - h) > rel_tol * h) {
      throw Error(ErrorCode::NonUniformSpacing,
                  "step " + std::to_string(i) + " deviates from mean spacing by " +
                      std::to_string(std::abs(step - h) / h) + " (relative)");
    }
  }
}

}  // namespace sasaki
