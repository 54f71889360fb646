#pragma once

#include <cstddef>
#include <vector>

#include "sasaki/frenet.hpp"
#include "sasaki/sampled_curve.hpp"

namespace sasaki {

/// Central-difference weights on the integer offsets -k..k (unit spacing)
/// for the given derivative order and even accuracy order (Fornberg's
/// recursion). Returns 2k+1 weights.
std::vector<double> central_weights(int derivative, int accuracy);

/// Settings for the sampled-curve jet path.
///
/// T is obtained from coordinates with the native grid spacing h. Its
/// derivatives are then taken on a coarser sub-grid of spacing stride*h:
/// the third derivative amplifies rounding noise like 1/H^3, so using the
/// native h = 1e-3 would leave ~1e-3 noise in nabla^3 T.
struct FiniteDifferenceSpec {
  int accuracy = 4;
  /// Target spacing for the derivatives of T; ignored when stride > 0.
  double derivative_spacing = 0.05;
  /// Explicit stride in samples; 0 derives it from derivative_spacing.
  int stride = 0;

  int resolved_stride(double h) const;
};

/// Precomputes frame components of T at every sample and serves jets at
/// interior indices.
class SampledJets {
 public:
  SampledJets(const SampledCurve& curve, const FiniteDifferenceSpec& spec = {});

  /// Smallest and largest sample index at which a full jet is available.
  std::size_t first_index() const noexcept { return first_; }
  std::size_t last_index() const noexcept { return last_; }
  int stride() const noexcept { return stride_; }

  Jet4 at(std::size_t index) const;

 private:
  const SampledCurve* curve_;
  int stride_ = 1;
  double h_ = 0.0;
  std::vector<double> w1_, wd1_, wd2_, wd3_;
  std::vector<FrameVector> t_;  // valid on [t_first_, t_last_]
  std::size_t t_first_ = 0, t_last_ = 0;
  std::size_t first_ = 0, last_ = 0;
};

/// Jets at every interior sample (endpoints excluded). Errors: TooFewSamples,
/// NonUniformSpacing.
std::vector<Jet4> jets_from_samples(const SampledCurve& curve, const FiniteDifferenceSpec& spec = {});

}  // namespace sasaki
