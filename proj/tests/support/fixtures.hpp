#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "sasaki/bitension.hpp"
#include "sasaki/generators.hpp"
#include "sasaki/trig_poly.hpp"

namespace sasaki::testing {

// Values computed by an independent symbolic check (coordinate Christoffel
// symbols and Riemann tensor of g = eta (x) eta + 1/4 sum(dx^2 + dy^2)).
namespace oracle {
// Printed perp-circle solution, beta0 = pi/3, c1 = (sqrt(3)/2, 0).
inline constexpr double kPerpKappa1 = 0.4330127018922195;
inline constexpr double kPerpAlpha = -0.8660254037844386;
inline constexpr double kPerpTau2 = 1.190784930203604;
// Par circle, c = -3.
inline constexpr double kParCircleKappa1 = 0.48586827175664565;
inline constexpr double kParCircleAlpha = -0.43701602444882104;
// Par circle with its rate scaled by 1.1.
inline constexpr double kPerturbedKappa1 = 0.4558399611565679;
inline constexpr double kPerturbedTau2 = 0.011149046453636482;
// Rotation rho = (sqrt(3)/2, 0), omega = 0.3, f = 0.5.
inline constexpr double kRotationKappa1 = 0.606217782649107;
inline constexpr double kRotationTau2 = 1.6913476135910088;
}  // namespace oracle

// Regression floors for the negative controls.
inline constexpr double kPerturbedFloor = 1e-2;
inline constexpr double kRotationFloor = 1.0;
inline constexpr double kGenericRotationFloor = 0.1;

inline GeneratorParams perp_params() {
  GeneratorParams p;
  p.kind = CurveKind::PerpCircle;
  p.n = 2;
  p.beta0 = M_PI / 3.0;
  p.c1 = {std::sqrt(3.0) / 2.0, 0.0};
  return p;
}

inline GeneratorParams par_circle_params() {
  GeneratorParams p;
  p.kind = CurveKind::ParCircle;
  p.n = 2;
  p.c1 = {0.43701602444882104, 0.0};
  return p;
}

inline GeneratorParams par_helix_params() {
  GeneratorParams p;
  p.kind = CurveKind::ParHelix;
  p.n = 2;
  p.beta0_cos2 = 0.9;
  p.sign = -1;
  p.c1 = {std::sqrt(0.1), 0.0};
  return p;
}

// Rebuilds a curve from its T with every frequency multiplied by `factor`.
inline AnalyticCurve scale_rates(const AnalyticCurve& c, double factor) {
  auto scale = [factor](const TrigPoly& p) {
    TrigPoly q(p.c0());
    for (const auto& t : p.terms()) q.add_term(t.freq * factor, t.cos_amp, t.sin_amp);
    return q;
  };
  std::vector<TrigPoly> ta, tb;
  for (const auto& p : c.ta) ta.push_back(scale(p));
  for (const auto& p : c.tb) tb.push_back(scale(p));
  const std::vector<double> zero(static_cast<std::size_t>(c.n), 0.0);
  return curve_from_frame(c.n, ta, tb, scale(c.tf), zero, zero, 0.0);
}

inline AnalyticCurve rotation_03() {
  return gen_rotation_fixture({std::sqrt(0.75), 0.0}, 0.3, {0.0, 0.0}, 0.5);
}

// n = 1 curve with T = (cos ps cos qs, cos ps sin qs, sin ps): eta(T) varies
// and kappa_1 is not constant.
inline AnalyticCurve tilted_fixture(double p = 0.7, double q = 1.3) {
  TrigPoly a, b, f;
  a.add_term(p - q, 0.5, 0.0).add_term(p + q, 0.5, 0.0);
  b.add_term(p + q, 0.0, 0.5).add_term(p - q, 0.0, -0.5);
  f.add_term(p, 0.0, 1.0);
  return curve_from_frame(1, {a}, {b}, f, {0.0}, {0.0}, 0.0);
}

// Eighth-order central difference of a scalar function.
inline double fd8(const std::function<double(double)>& g, double s, double h, int derivative) {
  static const double w1[] = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0, 4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  static const double w2[] = {-1.0 / 560, 8.0 / 315, -1.0 / 5, 8.0 / 5, -205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315, -1.0 / 560};
  const double* w = derivative == 1 ? w1 : w2;
  double acc = 0.0;
  for (int k = -4; k <= 4; ++k) acc += w[k + 4] * g(s + k * h);
  return acc / std::pow(h, derivative);
}

}  // namespace sasaki::testing
