#include "sasaki/frenet.hpp"

#include <cmath>
#include <string>

#include "sasaki/errors.hpp"

namespace sasaki {

CovariantJet covariant_jet(const Jet4& j) {
  const auto& t = j.t;
  const auto& dt = j.dt;
  const auto& d2t = j.d2t;
  require_same_dim(t, dt);
  require_same_dim(t, d2t);
  require_same_dim(t, j.d3t);

  // H and its ordinary derivatives follow from the product rule on the
  // bilinear, constant connection coefficients.
  const FrameVector h = dt + connection(t, t);
  const FrameVector h1 = d2t + connection(dt, t) + connection(t, dt);
  const FrameVector h2 = j.d3t + connection(d2t, t) + 2.0 * connection(dt, dt) + connection(t, d2t);

  const FrameVector d2 = h1 + connection(t, h);
  const FrameVector d2_prime = h2 + connection(dt, h) + connection(t, h1);
  const FrameVector d3 = d2_prime + connection(t, d2);
  return {h, d2, d3};
}

namespace {

// Classical Gram-Schmidt applied twice ("twice is enough").
FrameVector orthogonal_residual(FrameVector v, const std::vector<FrameVector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : basis) v -= g_frame(v, e) * e;
  }
  return v;
}

enum class Rank { Zero, Ambiguous, Positive };

Rank classify(double value, double threshold) {
  if (value < 0.1 * threshold) return Rank::Zero;
  if (value <= threshold) return Rank::Ambiguous;
  return Rank::Positive;
}

[[noreturn]] void degenerate(int which, double value) {
  throw Error(ErrorCode::DegenerateFrame,
              "kappa_" + std::to_string(which) + " = " + std::to_string(value) +
                  " falls in the ambiguous rank band");
}

}  // namespace

FrenetData frenet_apparatus(const Jet4& j, const CovariantJet& cj, const FrenetOptions& opts) {
  const double speed2 = g_frame(j.t, j.t);
  if (std::abs(speed2 - 1.0) > opts.unit_speed_tol) {
    throw Error(ErrorCode::NotUnitSpeed, "g(T,T) - 1 = " + std::to_string(speed2 - 1.0));
  }

  FrenetData fd;
  fd.e.push_back(j.t);
  fd.order = 1;

  const double k1 = norm(cj.h);
  switch (classify(k1, opts.rank_tol)) {
    case Rank::Zero: return fd;
    case Rank::Ambiguous: degenerate(1, k1);
    case Rank::Positive: break;
  }
  fd.kappa.push_back(k1);
  fd.e.push_back((1.0 / k1) * cj.h);
  fd.order = 2;
  fd.kappa1_prime = g_frame(cj.d2, fd.e[1]);

  // nabla^2 T = -k1^2 E1 + k1' E2 + k1 k2 E3
  const FrameVector r3 = orthogonal_residual(cj.d2, fd.e);
  const double k2 = norm(r3) / k1;
  switch (classify(k2, opts.rank_tol * k1)) {
    case Rank::Zero: return fd;
    case Rank::Ambiguous: degenerate(2, k2);
    case Rank::Positive: break;
  }
  fd.kappa.push_back(k2);
  fd.e.push_back((1.0 / (k1 * k2)) * r3);
  fd.order = 3;
  fd.kappa2_prime = (g_frame(cj.d3, fd.e[2]) - 2.0 * fd.kappa1_prime * k2) / k1;

  // nabla^3 T has E4 coefficient k1 k2 k3
  const FrameVector r4 = orthogonal_residual(cj.d3, fd.e);
  const double k3 = norm(r4) / (k1 * k2);
  switch (classify(k3, opts.rank_tol * k1)) {
    case Rank::Zero: return fd;
    case Rank::Ambiguous: degenerate(3, k3);
    case Rank::Positive: break;
  }
  fd.kappa.push_back(k3);
  fd.e.push_back((1.0 / (k1 * k2 * k3)) * r4);
  fd.order = 4;
  return fd;
}

StructureScalars structure_scalars(const Jet4& j, const FrenetData& fd) {
  StructureScalars ss;
  ss.f = eta_frame(j.t);
  // eta(T) = T_f in an orthonormal frame containing xi, so f' is the
  // derivative of that component.
  ss.fprime = j.dt.f;
  ss.present_up_to = fd.order;

  const FrameVector phi_t = phi_frame(j.t);
  if (fd.order >= 2) {
    ss.alpha = g_frame(fd.e[1], phi_t);
    ss.eta2 = eta_frame(fd.e[1]);
    ss.fprime_from_frame = fd.kappa[0] * ss.eta2;
  }
  if (fd.order >= 3) {
    ss.g3 = g_frame(fd.e[2], phi_t);
    ss.eta3 = eta_frame(fd.e[2]);
  }
  if (fd.order >= 4) {
    ss.g4 = g_frame(fd.e[3], phi_t);
    ss.eta4 = eta_frame(fd.e[3]);
  }
  ss.fprime_warning = std::abs(ss.fprime - ss.fprime_from_frame) > 1e-6;
  return ss;
}

PointGeometry analyze_point(const Jet4& j, const FrenetOptions& opts) {
  PointGeometry pg;
  pg.jet = j;
  pg.cov = covariant_jet(j);
  pg.frenet = frenet_apparatus(j, pg.cov, opts);
  pg.scalars = structure_scalars(j, pg.frenet);
  return pg;
}

}  // namespace sasaki
