#include "sasaki/generators.hpp"

#include <algorithm>
#include <cmath>

#include "sasaki/classifier.hpp"
#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

constexpr double kConstraintTol = 1e-12;
const double kSqrt5 = std::sqrt(5.0);

double dot(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

void check(const char* name, double residual) {
  if (std::abs(residual) > kConstraintTol) throw ConstraintError(name, residual);
}

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

// cos^2 beta0 of the circles with H parallel to phi T at c = -3.
double par_circle_cos2() { return (1.0 + kSqrt5) / 4.0; }

void resolve_angle(const GeneratorParams& p, double& cos_b, double& sin_b) {
  if (p.beta0) {
    cos_b = std::cos(*p.beta0);
    sin_b = std::sin(*p.beta0);
  } else if (p.beta0_cos2) {
    const double b0 = AngleParams::beta0_from_cos2(*p.beta0_cos2);
    cos_b = std::cos(b0);
    sin_b = std::sin(b0);
  } else {
    throw Error(ErrorCode::MalformedInput, "beta0 or beta0_cos2 is required");
  }
}

double beta0_of(const GeneratorParams& p) {
  return p.beta0 ? *p.beta0 : AngleParams::beta0_from_cos2(*p.beta0_cos2);
}

// T_a = cos(nu s) c1 + sin(nu s) c2, T_b = cos(nu s) c2 - sin(nu s) c1, i.e.
// T_a + i T_b = (c1 + i c2) exp(-i nu s).
void rotation_frame(const GeneratorParams& p, double nu, std::vector<TrigPoly>& ta, std::vector<TrigPoly>& tb) {
  const auto n = static_cast<std::size_t>(p.n);
  ta.assign(n, TrigPoly());
  tb.assign(n, TrigPoly());
  for (std::size_t i = 0; i < n; ++i) {
    ta[i].add_term(nu, p.c1[i], p.c2[i]);
    tb[i].add_term(nu, p.c2[i], -p.c1[i]);
  }
}

}  // namespace

const char* to_string(CurveKind k) noexcept {
  switch (k) {
    case CurveKind::PerpCircle: return "perp-circle";
    case CurveKind::ParCircle: return "par-circle";
    case CurveKind::ParHelix: return "par-helix";
    case CurveKind::Rotation: return "rotation";
    case CurveKind::Frame: return "frame";
  }
  return "?";
}

CurveKind curve_kind_from_string(const std::string& s) {
  if (s == "perp-circle") return CurveKind::PerpCircle;
  if (s == "par-circle") return CurveKind::ParCircle;
  if (s == "par-helix") return CurveKind::ParHelix;
  throw Error(ErrorCode::MalformedInput, "unknown kind '" + s + "'");
}

void GeneratorParams::normalize() {
  Dimension dim(n);
  (void)dim;
  for (auto* v : {&c1, &c2, &d1, &d2, &a, &b}) {
    if (v->empty()) v->assign(static_cast<std::size_t>(n), 0.0);
    if (v->size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::DimensionMismatch, "parameter vector length differs from n");
    }
  }
  if (sign && *sign != 1 && *sign != -1) throw Error(ErrorCode::MalformedInput, "sign must be +1 or -1");
}

double AnalyticCurve::lowest_frequency() const noexcept {
  double w = 0.0;
  auto take = [&](const TrigPoly& p) {
    const double f = p.lowest_frequency();
    if (f > 0.0 && (w == 0.0 || f < w)) w = f;
  };
  for (const auto& p : ta) take(p);
  for (const auto& p : tb) take(p);
  take(tf);
  return w;
}

CoordPoint AnalyticCurve::point(double s) const {
  CoordPoint q = CoordPoint::origin(Dimension(n));
  for (std::size_t i = 0; i < x.size(); ++i) {
    q.x[i] = x[i](s);
    q.y[i] = y[i](s);
  }
  q.z = z(s);
  return q;
}

CurveConstants resolve_constants(const GeneratorParams& p) {
  CurveConstants k;
  switch (p.kind) {
    case CurveKind::PerpCircle: {
      resolve_angle(p, k.cos_beta0, k.sin_beta0);
      if (std::abs(k.cos_beta0) < 1e-9 || std::abs(k.sin_beta0) < 1e-9) {
        throw Error(ErrorCode::InadmissibleAngle, "cos(beta0) must not be 0 or +-1");
      }
      k.sign = p.sign.value_or(sign_of(k.cos_beta0));
      check("sign branch (sign * cos(beta0) > 0)", k.sign == sign_of(k.cos_beta0) ? 0.0 : 2.0 * std::abs(k.cos_beta0));
      k.kappa1 = std::abs(k.cos_beta0);
      break;
    }
    case CurveKind::ParCircle: {
      if (p.beta0 || p.beta0_cos2) {
        resolve_angle(p, k.cos_beta0, k.sin_beta0);
        check("circle angle (cos^2(beta0) = (1+sqrt5)/4)", k.cos_beta0 * k.cos_beta0 - par_circle_cos2());
        check("sign branch (sign * cos(beta0) > 0)",
              p.sign && *p.sign != sign_of(k.cos_beta0) ? 2.0 * std::abs(k.cos_beta0) : 0.0);
      } else {
        k.cos_beta0 = p.sign.value_or(1) * std::sqrt(par_circle_cos2());
        k.sin_beta0 = std::sqrt(1.0 - par_circle_cos2());
      }
      k.sign = sign_of(k.cos_beta0);
      k.kappa1 = std::abs(k.sin_beta0 / k.cos_beta0);
      // (T_i + i T_{n+i})' = i mu (T_i + i T_{n+i}) with mu = 2 f + eps kappa1 / sin(beta0),
      // eps kappa1 = -tan(beta0) on circles.
      k.rate = 2.0 * k.cos_beta0 - 1.0 / k.cos_beta0;
      break;
    }
    case CurveKind::ParHelix: {
      resolve_angle(p, k.cos_beta0, k.sin_beta0);
      AngleParams angles;
      angles.beta0 = beta0_of(p);
      angles.sign = p.sign;
      const ClassificationResult cr = admissible_par(-3.0, angles);
      std::vector<CurveSolution> roots;
      for (const auto& s : cr.solutions) roots.push_back(s);
      if (roots.empty()) throw Error(ErrorCode::InadmissibleAngle, "no positive curvature root at this beta0");
      const CurveSolution* pick = &roots.front();
      if (p.kappa1) {
        pick = nullptr;
        double best = INFINITY;
        for (const auto& s : roots) {
          if (std::abs(*s.kappa1 - *p.kappa1) < best) {
            best = std::abs(*s.kappa1 - *p.kappa1);
            pick = &s;
          }
        }
        if (best > 1e-9) throw ConstraintError("kappa1 root of the curvature quadratic", best);
      }
      k.sign = pick->sign;
      k.kappa1 = *pick->kappa1;
      k.kappa2 = pick->kappa2.value_or(0.0);
      k.rate = 2.0 * k.cos_beta0 + k.sign * k.kappa1 / k.sin_beta0;
      break;
    }
    default: throw Error(ErrorCode::MalformedInput, "kind has no explicit solution");
  }
  return k;
}

AnalyticCurve curve_from_frame(int n, std::vector<TrigPoly> ta, std::vector<TrigPoly> tb, TrigPoly tf,
                               const std::vector<double>& a, const std::vector<double>& b, double z0) {
  const Dimension dim(n);
  const auto un = static_cast<std::size_t>(dim.value());
  if (ta.size() != un || tb.size() != un || a.size() != un || b.size() != un) {
    throw Error(ErrorCode::DimensionMismatch, "frame components do not match n");
  }
  AnalyticCurve c;
  c.n = n;
  TrigPoly dz = 2.0 * tf;
  for (std::size_t i = 0; i < un; ++i) {
    const TrigPoly dx = 2.0 * tb[i];
    c.x.push_back(dx.antiderivative() + TrigPoly(a[i]));
    c.y.push_back((2.0 * ta[i]).antiderivative() + TrigPoly(b[i]));
    dz += c.y.back() * dx;
  }
  c.z = dz.antiderivative() + TrigPoly(z0);
  c.ta = std::move(ta);
  c.tb = std::move(tb);
  c.tf = std::move(tf);
  c.meta.n = n;
  c.meta.kind = CurveKind::Frame;
  return c;
}

AnalyticCurve gen_circle_perp(GeneratorParams p) {
  p.kind = CurveKind::PerpCircle;
  if (p.n < 2) throw Error(ErrorCode::BadDimension, "perp circles need n >= 2");
  p.normalize();
  const CurveConstants k = resolve_constants(p);
  const double s2 = k.sin_beta0 * k.sin_beta0;
  const double sg = k.sign;
  check("norm constraint |c1|^2+|c2|^2+|d1|^2+|d2|^2 = sin^2(beta0)",
        dot(p.c1, p.c1) + dot(p.c2, p.c2) + dot(p.d1, p.d1) + dot(p.d2, p.d2) - s2);
  check("orthogonality <c1,d1> + sign <c2,d2> = 0", dot(p.c1, p.d1) + sg * dot(p.c2, p.d2));
  check("orthogonality <c1,d2> - sign <c2,d1> = 0", dot(p.c1, p.d2) - sg * dot(p.c2, p.d1));

  const double w = k.kappa1;
  const auto n = static_cast<std::size_t>(p.n);
  std::vector<TrigPoly> ta(n), tb(n);
  for (std::size_t i = 0; i < n; ++i) {
    // T_i = -sin(w s) c1 + sign cos(w s) c2 + cos(2 w s) d1 + sin(2 w s) d2
    ta[i].add_term(w, sg * p.c2[i], -p.c1[i]).add_term(2.0 * w, p.d1[i], p.d2[i]);
    // T_{n+i} = sign cos(w s) c1 + sin(w s) c2 + sign sin(2 w s) d1 - sign cos(2 w s) d2
    tb[i].add_term(w, sg * p.c1[i], p.c2[i]).add_term(2.0 * w, -sg * p.d2[i], sg * p.d1[i]);
  }
  AnalyticCurve c = curve_from_frame(p.n, std::move(ta), std::move(tb), TrigPoly(k.cos_beta0), p.a, p.b, p.z0);
  c.meta = p;
  return c;
}

AnalyticCurve gen_circle_par(GeneratorParams p) {
  p.kind = CurveKind::ParCircle;
  p.normalize();
  const CurveConstants k = resolve_constants(p);
  check("norm constraint |c1|^2+|c2|^2 = (3-sqrt5)/4",
        dot(p.c1, p.c1) + dot(p.c2, p.c2) - (3.0 - kSqrt5) / 4.0);
  std::vector<TrigPoly> ta, tb;
  rotation_frame(p, -k.rate, ta, tb);
  AnalyticCurve c = curve_from_frame(p.n, std::move(ta), std::move(tb), TrigPoly(k.cos_beta0), p.a, p.b, p.z0);
  c.meta = p;
  return c;
}

AnalyticCurve gen_helix_par(GeneratorParams p) {
  p.kind = CurveKind::ParHelix;
  p.normalize();
  const CurveConstants k = resolve_constants(p);
  check("norm constraint |c1|^2+|c2|^2 = sin^2(beta0)",
        dot(p.c1, p.c1) + dot(p.c2, p.c2) - k.sin_beta0 * k.sin_beta0);
  std::vector<TrigPoly> ta, tb;
  rotation_frame(p, -k.rate, ta, tb);
  AnalyticCurve c = curve_from_frame(p.n, std::move(ta), std::move(tb), TrigPoly(k.cos_beta0), p.a, p.b, p.z0);
  c.meta = p;
  return c;
}

AnalyticCurve generate(const GeneratorParams& p) {
  switch (p.kind) {
    case CurveKind::PerpCircle: return gen_circle_perp(p);
    case CurveKind::ParCircle: return gen_circle_par(p);
    case CurveKind::ParHelix: return gen_helix_par(p);
    default: throw Error(ErrorCode::MalformedInput, "kind has no explicit solution");
  }
}

AnalyticCurve gen_rotation_fixture(const std::vector<double>& rho, double omega, const std::vector<double>& theta,
                                   double f) {
  return gen_rotation_fixture(rho, std::vector<double>(rho.size(), omega), theta, f);
}

AnalyticCurve gen_rotation_fixture(const std::vector<double>& rho, const std::vector<double>& omegas,
                                   const std::vector<double>& theta, double f) {
  const Dimension dim(static_cast<int>(rho.size()));
  if (omegas.size() != rho.size() || theta.size() != rho.size()) {
    throw Error(ErrorCode::DimensionMismatch, "rho, omega and theta must have length n");
  }
  if (!(std::abs(f) > 0.0 && std::abs(f) < 1.0)) throw Error(ErrorCode::NormViolated, "need 0 < |f| < 1");
  const double defect = dot(rho, rho) - (1.0 - f * f);
  if (std::abs(defect) > kConstraintTol) {
    throw Error(ErrorCode::NormViolated, "sum rho^2 - (1 - f^2) = " + std::to_string(defect));
  }
  const auto n = rho.size();
  std::vector<TrigPoly> ta(n), tb(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = rho[i] * std::cos(theta[i]), s = rho[i] * std::sin(theta[i]);
    ta[i].add_term(omegas[i], c, -s);
    tb[i].add_term(omegas[i], s, c);
  }
  std::vector<double> zero(n, 0.0);
  AnalyticCurve curve = curve_from_frame(dim.value(), std::move(ta), std::move(tb), TrigPoly(f), zero, zero, 0.0);
  curve.meta.kind = CurveKind::Rotation;
  return curve;
}

Jet4 eval_jet(const AnalyticCurve& curve, double s) {
  const Dimension dim(curve.n);
  Jet4 j;
  j.s = s;
  FrameVector* slots[4] = {&j.t, &j.dt, &j.d2t, &j.d3t};
  for (int k = 0; k < 4; ++k) {
    FrameVector v(dim);
    for (std::size_t i = 0; i < curve.ta.size(); ++i) {
      v.a[i] = curve.ta[i].derivative_at(k, s);
      v.b[i] = curve.tb[i].derivative_at(k, s);
    }
    v.f = curve.tf.derivative_at(k, s);
    *slots[k] = std::move(v);
  }
  return j;
}

IdentityDefects identity_defects(const AnalyticCurve& curve) {
  IdentityDefects d;
  TrigPoly dz = 2.0 * curve.tf;
  TrigPoly speed = curve.tf * curve.tf - TrigPoly(1.0);
  for (std::size_t i = 0; i < curve.ta.size(); ++i) {
    const TrigPoly dx = 2.0 * curve.tb[i];
    d.velocity = std::max(d.velocity, max_coefficient_diff(curve.x[i].derivative(), dx));
    d.velocity = std::max(d.velocity, max_coefficient_diff(curve.y[i].derivative(), 2.0 * curve.ta[i]));
    dz += curve.y[i] * dx;
    speed += curve.ta[i] * curve.ta[i] + curve.tb[i] * curve.tb[i];
  }
  d.velocity = std::max(d.velocity, max_coefficient_diff(curve.z.derivative(), dz));
  d.unit_speed = speed.max_coefficient();
  return d;
}

PrintedBlock printed_block(const GeneratorParams& params) {
  GeneratorParams p = params;
  p.normalize();
  const CurveConstants k = resolve_constants(p);
  const auto n = static_cast<std::size_t>(p.n);
  PrintedBlock out;
  out.x.assign(n, TrigPoly());
  out.y.assign(n, TrigPoly());
  double sum_c1c1_minus_c2c2 = 0.0, sum_c1c2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_c1c1_minus_c2c2 += p.c1[i] * p.c1[i] - p.c2[i] * p.c2[i];
    sum_c1c2 += p.c1[i] * p.c2[i];
  }

  switch (p.kind) {
    case CurveKind::PerpCircle: {
      const double w = k.kappa1, sg = k.sign;
      double c_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        c_sq += p.c1[i] * p.c1[i] + p.c2[i] * p.c2[i];
        // x = sign/w (2 sin(ws) c1 - sign 2 cos(ws) c2 - cos(2ws) d1 - sin(2ws) d2) + a
        out.x[i].add_term(w, -2.0 * p.c2[i] / w, sg * 2.0 * p.c1[i] / w)
            .add_term(2.0 * w, -sg * p.d1[i] / w, -sg * p.d2[i] / w);
        out.x[i] += TrigPoly(p.a[i]);
        // y = 1/w (2 cos(ws) c1 + sign 2 sin(ws) c2 + sin(2ws) d1 - cos(2ws) d2) + b
        out.y[i].add_term(w, 2.0 * p.c1[i] / w, sg * 2.0 * p.c2[i] / w)
            .add_term(2.0 * w, -p.d2[i] / w, p.d1[i] / w);
        out.y[i] += TrigPoly(p.b[i]);
      }
      TrigPoly z = TrigPoly::linear(p.z0, sg * 2.0 / w * (1.0 + c_sq));
      const double q = 1.0 / (2.0 * w * w);
      for (std::size_t i = 0; i < n; ++i) {
        z.add_term(4.0 * w, q * sg * p.d1[i] * p.d2[i], 0.0);
        z.add_term(2.0 * w, -q * 2.0 * p.c1[i] * p.c2[i], 0.0);
        z.add_term(3.0 * w, q * 4.0 * p.c2[i] * p.d2[i], -q * 4.0 * p.c1[i] * p.d2[i]);
        // - sign/w b (-2 sin(ws) c1 + sign 2 cos(ws) c2 + cos(2ws) d1 + sin(2ws) d2)
        const double m = -sg / w * p.b[i];
        z.add_term(w, m * sg * 2.0 * p.c2[i], -m * 2.0 * p.c1[i]);
        z.add_term(2.0 * w, m * p.d1[i], m * p.d2[i]);
      }
      out.z = z;
      break;
    }
    case CurveKind::ParCircle: {
      const double w = (kSqrt5 - 1.0) / 2.0, amp = kSqrt5 + 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        out.x[i].add_term(w, amp * p.c1[i], amp * p.c2[i]);
        out.x[i] += TrigPoly(p.a[i]);
        out.y[i].add_term(w, -amp * p.c2[i], amp * p.c1[i]);
        out.y[i] += TrigPoly(p.b[i]);
      }
      TrigPoly z = TrigPoly::linear(p.z0, (1.0 - kSqrt5 + k.sign * 2.0 * std::sqrt(1.0 + kSqrt5)) / 2.0);
      const double q = (3.0 + kSqrt5) / 2.0;
      z.add_term(2.0 * w, -q * 2.0 * sum_c1c2, q * sum_c1c1_minus_c2c2);
      for (std::size_t i = 0; i < n; ++i) z.add_term(w, amp * p.b[i] * p.c1[i], amp * p.b[i] * p.c2[i]);
      out.z = z;
      break;
    }
    case CurveKind::ParHelix: {
      const double s2b = 2.0 * k.sin_beta0 * k.cos_beta0;
      const double den = k.kappa1 + k.sign * s2b;
      const double w = den / k.kappa1;
      const double amp = 2.0 * k.kappa1 / den;
      for (std::size_t i = 0; i < n; ++i) {
        out.x[i].add_term(w, -amp * p.c1[i], -amp * p.c2[i]);
        out.x[i] += TrigPoly(p.a[i]);
        out.y[i].add_term(w, -amp * p.c2[i], amp * p.c1[i]);
        out.y[i] += TrigPoly(p.b[i]);
      }
      TrigPoly z = TrigPoly::linear(
          p.z0, 2.0 * (k.cos_beta0 + k.kappa1 * k.sin_beta0 * k.sin_beta0 / den));
      const double q = k.kappa1 * k.kappa1 / (den * den);
      z.add_term(2.0 * w, q * sum_c1c2, q * sum_c1c1_minus_c2c2);
      for (std::size_t i = 0; i < n; ++i) z.add_term(w, -amp * p.b[i] * p.c1[i], -amp * p.b[i] * p.c2[i]);
      out.z = z;
      break;
    }
    default: throw Error(ErrorCode::MalformedInput, "kind has no printed block");
  }
  return out;
}

std::vector<BlockDiff> compare_printed_block(const AnalyticCurve& curve, double tol) {
  const PrintedBlock pb = printed_block(curve.meta);
  std::vector<BlockDiff> out;
  auto collect = [&](const std::string& name, const TrigPoly& expected, const TrigPoly& actual) {
    for (auto& d : coefficient_diffs(expected, actual, tol, true)) out.push_back({name, std::move(d)});
  };
  for (std::size_t i = 0; i < pb.x.size(); ++i) {
    collect("x" + std::to_string(i + 1), pb.x[i], curve.x[i]);
    collect("y" + std::to_string(i + 1), pb.y[i], curve.y[i]);
  }
  collect("z", pb.z, curve.z);
  return out;
}

}  // namespace sasaki
