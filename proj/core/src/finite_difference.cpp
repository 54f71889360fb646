#include "sasaki/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sasaki/errors.hpp"

namespace sasaki {

std::vector<double> central_weights(int derivative, int accuracy) {
  if (derivative < 1 || accuracy < 2 || accuracy % 2 != 0) {
    throw Error(ErrorCode::MalformedInput, "unsupported stencil request");
  }
  const int points = 2 * ((derivative + 1) / 2) - 1 + accuracy;
  const int k = (points - 1) / 2;
  const int m = derivative;

  std::vector<double> x(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) x[static_cast<std::size_t>(i)] = static_cast<double>(i - k);

  // Fornberg, "Generation of finite difference formulas on arbitrarily
  // spaced grids" (1988), evaluated at z = 0.
  std::vector<std::vector<double>> c(static_cast<std::size_t>(points),
                                     std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < points; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[ui];
    for (int j = 0; j < i; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double c3 = x[ui] - x[uj];
      c2 *= c3;
      if (j == i - 1) {
        for (int q = mn; q >= 1; --q) {
          const auto uq = static_cast<std::size_t>(q);
          c[ui][uq] = c1 * (q * c[ui - 1][uq - 1] - c5 * c[ui - 1][uq]) / c2;
        }
        c[ui][0] = -c1 * c5 * c[ui - 1][0] / c2;
      }
      for (int q = mn; q >= 1; --q) {
        const auto uq = static_cast<std::size_t>(q);
        c[uj][uq] = (c4 * c[uj][uq] - q * c[uj][uq - 1]) / c3;
      }
      c[uj][0] = c4 * c[uj][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
  return w;
}

int FiniteDifferenceSpec::resolved_stride(double h) const {
  if (stride > 0) return stride;
  if (!(h > 0.0)) return 1;
  return std::max(1, static_cast<int>(std::lround(derivative_spacing / h)));
}

namespace {

std::size_t half_width(const std::vector<double>& w) { return (w.size() - 1) / 2; }

}  // namespace

SampledJets::SampledJets(const SampledCurve& curve, const FiniteDifferenceSpec& spec)
    : curve_(&curve) {
  validate_uniform(curve);
  h_ = curve.spacing();
  stride_ = spec.resolved_stride(h_);
  w1_ = central_weights(1, spec.accuracy);
  wd1_ = central_weights(1, spec.accuracy);
  wd2_ = central_weights(2, spec.accuracy);
  wd3_ = central_weights(3, spec.accuracy);

  const std::size_t k1 = half_width(w1_);
  const std::size_t k3 = std::max({half_width(wd1_), half_width(wd2_), half_width(wd3_)});
  const std::size_t margin = k1 + k3 * static_cast<std::size_t>(stride_);
  const std::size_t count = curve.size();
  if (count < 2 * margin + 1) {
    throw Error(ErrorCode::TooFewSamples,
                "need at least " + std::to_string(2 * margin + 1) + " samples, got " + std::to_string(count));
  }
  first_ = margin;
  last_ = count - 1 - margin;
  t_first_ = k1;
  t_last_ = count - 1 - k1;

  const std::size_t n = static_cast<std::size_t>(curve.n);
  t_.resize(count);
  for (std::size_t i = t_first_; i <= t_last_; ++i) {
    CoordVelocity v{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0};
    for (std::size_t q = 0; q < w1_.size(); ++q) {
      const auto& p = curve.points[i + q - k1];
      const double w = w1_[q] / h_;
      for (std::size_t c = 0; c < n; ++c) {
        v.dx[c] += w * p.x[c];
        v.dy[c] += w * p.y[c];
      }
      v.dz += w * p.z;
    }
    t_[i] = coord_to_frame(curve.points[i], v);
  }
}

Jet4 SampledJets::at(std::size_t index) const {
  if (index < first_ || index > last_) {
    throw Error(ErrorCode::TooFewSamples, "index " + std::to_string(index) + " is not interior");
  }
  const double big_h = h_ * stride_;
  const Dimension dim(curve_->n);
  auto apply = [&](const std::vector<double>& w, int order) {
    FrameVector out(dim);
    const std::size_t k = half_width(w);
    const double scale = 1.0 / std::pow(big_h, order);
    for (std::size_t q = 0; q < w.size(); ++q) {
      if (w[q] == 0.0) continue;
      const std::size_t idx = index + q * static_cast<std::size_t>(stride_) - k * static_cast<std::size_t>(stride_);
      out += (w[q] * scale) * t_[idx];
    }
    return out;
  };
  Jet4 j;
  j.s = curve_->s[index];
  j.t = t_[index];
  j.dt = apply(wd1_, 1);
  j.d2t = apply(wd2_, 2);
  j.d3t = apply(wd3_, 3);
  return j;
}

std::vector<Jet4> jets_from_samples(const SampledCurve& curve, const FiniteDifferenceSpec& spec) {
  const SampledJets jets(curve, spec);
  std::vector<Jet4> out;
  out.reserve(jets.last_index() - jets.first_index() + 1);
  for (std::size_t i = jets.first_index(); i <= jets.last_index(); ++i) out.push_back(jets.at(i));
  return out;
}

}  // namespace sasaki
