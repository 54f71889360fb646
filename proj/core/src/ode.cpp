#include "sasaki/ode.hpp"

#include <cmath>
#include <cstdio>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

// State layout: ta[n], tb[n], p[n], q[n], x[n], y[n], z.
struct Layout {
  std::size_t n;
  std::size_t ta(std::size_t i) const { return i; }
  std::size_t tb(std::size_t i) const { return n + i; }
  std::size_t p(std::size_t i) const { return 2 * n + i; }
  std::size_t q(std::size_t i) const { return 3 * n + i; }
  std::size_t x(std::size_t i) const { return 4 * n + i; }
  std::size_t y(std::size_t i) const { return 5 * n + i; }
  std::size_t z() const { return 6 * n; }
  std::size_t size() const { return 6 * n + 1; }
};

using State = std::vector<double>;

void axpy(State& out, const State& a, double h, const State& k) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + h * k[i];
}

}  // namespace

SampledCurve gen_by_ode(const GeneratorParams& params, double h, const Span& span, double* max_drift) {
  if (!(h > 0.0) || !(span.s1 > span.s0)) throw Error(ErrorCode::MalformedInput, "need h > 0 and s1 > s0");
  const AnalyticCurve ref = generate(params);
  const CurveConstants k = resolve_constants(ref.meta);
  const bool perp = ref.meta.kind == CurveKind::PerpCircle;
  const double f = k.cos_beta0;
  const double mu = k.rate;

  const Layout L{static_cast<std::size_t>(ref.n)};
  const std::size_t n = L.n;
  const auto steps = static_cast<std::size_t>(std::ceil((span.s1 - span.s0) / h - 1e-9));
  const double step = (span.s1 - span.s0) / static_cast<double>(steps);

  State y0(L.size(), 0.0);
  {
    const Jet4 j = eval_jet(ref, span.s0);
    const FrameVector hv = j.dt + connection(j.t, j.t);
    const CoordPoint pt = ref.point(span.s0);
    for (std::size_t i = 0; i < n; ++i) {
      y0[L.ta(i)] = j.t.a[i];
      y0[L.tb(i)] = j.t.b[i];
      y0[L.p(i)] = hv.a[i];
      y0[L.q(i)] = hv.b[i];
      y0[L.x(i)] = pt.x[i];
      y0[L.y(i)] = pt.y[i];
    }
    y0[L.z()] = pt.z;
  }

  auto rhs = [&](const State& s, State& d) {
    double sum_ydx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ta = s[L.ta(i)], tb = s[L.tb(i)];
      if (perp) {
        d[L.ta(i)] = s[L.p(i)] - 2.0 * f * tb;
        d[L.tb(i)] = s[L.q(i)] + 2.0 * f * ta;
        d[L.p(i)] = -f * s[L.q(i)];
        d[L.q(i)] = f * s[L.p(i)];
      } else {
        d[L.ta(i)] = -mu * tb;
        d[L.tb(i)] = mu * ta;
        d[L.p(i)] = 0.0;
        d[L.q(i)] = 0.0;
      }
      d[L.x(i)] = 2.0 * tb;
      d[L.y(i)] = 2.0 * ta;
      sum_ydx += s[L.y(i)] * 2.0 * tb;
    }
    d[L.z()] = 2.0 * f + sum_ydx;
  };
  auto speed_defect = [&](const State& s) {
    double g = f * f;
    for (std::size_t i = 0; i < n; ++i) g += s[L.ta(i)] * s[L.ta(i)] + s[L.tb(i)] * s[L.tb(i)];
    return g - 1.0;
  };

  SampledCurve out;
  out.n = ref.n;
  out.s.reserve(steps + 1);
  out.points.reserve(steps + 1);
  auto emit = [&](double s, const State& st) {
    CoordPoint pt = CoordPoint::origin(Dimension(ref.n));
    for (std::size_t i = 0; i < n; ++i) {
      pt.x[i] = st[L.x(i)];
      pt.y[i] = st[L.y(i)];
    }
    pt.z = st[L.z()];
    out.s.push_back(s);
    out.points.push_back(std::move(pt));
  };

  State y = y0, k1(L.size()), k2(L.size()), k3(L.size()), k4(L.size()), tmp(L.size());
  const double g0 = speed_defect(y0);
  double drift = std::abs(g0);
  emit(span.s0, y);
  for (std::size_t it = 1; it <= steps; ++it) {
    rhs(y, k1);
    axpy(tmp, y, step / 2.0, k1);
    rhs(tmp, k2);
    axpy(tmp, y, step / 2.0, k2);
    rhs(tmp, k3);
    axpy(tmp, y, step, k3);
    rhs(tmp, k4);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    const double s = it == steps ? span.s1 : span.s0 + step * static_cast<double>(it);
    const double dev = std::abs(speed_defect(y) - g0);
    drift = std::max(drift, std::abs(speed_defect(y)));
    if (dev > 1e-8 * std::max(1.0, s - span.s0)) {
      if (max_drift) *max_drift = drift;
      char msg[96];
      std::snprintf(msg, sizeof msg, "unit-speed drift %.3g at s = %.6g", dev, s);
      throw Error(ErrorCode::StepTooLarge, msg);
    }
    emit(s, y);
  }
  if (max_drift) *max_drift = drift;
  return out;
}

}  // namespace sasaki
