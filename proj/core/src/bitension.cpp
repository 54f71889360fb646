#include "sasaki/bitension.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sasaki/errors.hpp"

namespace sasaki {

FrameVector bitension_direct(const Jet4& j, const CovariantJet& cj, double c) {
  return cj.d3 - curvature_space_form(c, j.t, cj.h, j.t);
}

FrameVector bitension_direct_model(const Jet4& j, const CovariantJet& cj) {
  return cj.d3 - curvature_from_connection(j.t, cj.h, j.t);
}

BitensionExpansion bitension_expansion(const FrenetData& fd, const StructureScalars& ss,
                                       const CurvatureDerivatives& derivs, double c,
                                       const FrameVector& phi_t) {
  if (fd.order < 2) throw Error(ErrorCode::MissingScalar, "expansion needs osculating order >= 2");
  if (!ss.has(fd.order)) {
    throw Error(ErrorCode::MissingScalar, "structure scalars do not cover the osculating order");
  }
  const double k1 = fd.kappa_or_zero(1);
  const double k2 = fd.kappa_or_zero(2);
  const double k3 = fd.kappa_or_zero(3);
  const double k1p = derivs.kappa1_prime;
  const double k1pp = derivs.kappa1_second;
  const double k2p = derivs.kappa2_prime;
  const double f = ss.f, fp = ss.fprime;
  const double cm = (c - 1.0) / 4.0;

  BitensionExpansion out;
  out.coef_e[0] = -3.0 * k1 * k1p + cm * f * fp;
  out.coef_e[1] = k1pp - k1 * k1 * k1 - k1 * k2 * k2 + (c + 3.0) * k1 / 4.0 - cm * k1 * f * f;
  out.coef_e[2] = 2.0 * k1p * k2 + k1 * k2p;
  out.coef_e[3] = k1 * k2 * k3;
  out.coef_xi = -cm * fp;
  out.coef_phi_t = 3.0 * cm * k1 * ss.alpha;

  const Dimension n = phi_t.dimension();
  FrameVector v(n);
  const std::array<double, 4> etas{ss.f, ss.eta2, ss.eta3, ss.eta4};
  double eta = out.coef_xi;
  for (std::size_t i = 0; i < fd.e.size() && i < 4; ++i) {
    v += out.coef_e[i] * fd.e[i];
    eta += out.coef_e[i] * etas[i];
  }
  // Coefficients for E_j beyond the order multiply vanishing curvatures.
  v += out.coef_xi * FrameVector::xi(n);
  v += out.coef_phi_t * phi_t;
  out.value = std::move(v);
  out.eta = eta;  // eta(phi T) = 0
  return out;
}

double SystemResiduals::max_abs() const noexcept {
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

SystemResiduals system_residuals(const FrenetData& fd, const StructureScalars& ss, double c) {
  if (c == 1.0) throw Error(ErrorCode::CIsOne, "use classify_c1 for c = 1");
  if (fd.order < 2) throw Error(ErrorCode::MissingScalar, "system needs osculating order >= 2");
  const double k1 = fd.kappa_or_zero(1);
  const double k2 = fd.kappa_or_zero(2);
  const double k3 = fd.kappa_or_zero(3);
  const double cm = (c - 1.0) / 4.0;
  const double f = ss.f, fp = ss.fprime, alpha = ss.alpha;

  SystemResiduals res;
  res.truncated = fd.order < 4;
  res.r[0] = fd.kappa1_prime;
  res.r[1] = k1 * k1 + k2 * k2 -
             ((c + 3.0) / 4.0 - cm * f * f - cm * fp * fp / (k1 * k1) + 3.0 * cm * alpha * alpha);
  res.r[2] = fd.kappa2_prime - cm * fp * ss.eta3 / k1 + 3.0 * cm * alpha * ss.g3;
  res.r[3] = k2 * k3 - cm * fp * ss.eta4 / k1 + 3.0 * cm * alpha * ss.g4;
  return res;
}

double kappa_constancy(std::span<const double> kappa1_samples) {
  const std::size_t m = kappa1_samples.size();
  if (m < 2) return 0.0;
  const double mean = std::accumulate(kappa1_samples.begin(), kappa1_samples.end(), 0.0) / static_cast<double>(m);
  double ss = 0.0;
  for (double k : kappa1_samples) ss += (k - mean) * (k - mean);
  const double sd = std::sqrt(ss / static_cast<double>(m - 1));
  return mean != 0.0 ? sd / std::abs(mean) : sd;
}

double laplacian_eigen_check(const Jet4& j, const CovariantJet& cj, double lambda) {
  (void)j;
  return (cj.d3 + lambda * cj.h).max_abs();
}

}  // namespace sasaki
