#pragma once

#include <array>
#include <span>

#include "sasaki/frenet.hpp"

namespace sasaki {

/// tau_2 = nabla_T^3 T - R(T, nabla_T T) T with R of a space form of constant
/// phi-sectional curvature c.
FrameVector bitension_direct(const Jet4& j, const CovariantJet& cj, double c);

/// Same, with R taken from the connection table (c = -3 model only).
FrameVector bitension_direct_model(const Jet4& j, const CovariantJet& cj);

/// Arc-length derivatives of the curvatures consumed by the frame expansion.
struct CurvatureDerivatives {
  double kappa1_prime = 0.0;
  double kappa1_second = 0.0;
  double kappa2_prime = 0.0;
};

/// Coefficients of tau_2 in the frame expansion
///   tau_2 = sum_j coef_e[j] E_{j+1} + coef_xi xi + coef_phi_t phi T.
struct BitensionExpansion {
  std::array<double, 4> coef_e{};
  double coef_xi = 0.0;
  double coef_phi_t = 0.0;
  /// The assembled vector in frame components.
  FrameVector value;
  /// eta(tau_2) from the bookkeeping: sum coef_e[j] eta(E_{j+1}) + coef_xi.
  double eta = 0.0;
};

/// Assembles tau_2 from curvatures, structure scalars and (kappa_1', kappa_1'',
/// kappa_2'). Requires order >= 2; throws MissingScalar when the scalars do not
/// cover the claimed osculating order.
BitensionExpansion bitension_expansion(const FrenetData& fd, const StructureScalars& ss,
                                       const CurvatureDerivatives& derivs, double c,
                                       const FrameVector& phi_t);

/// Residuals of the c != 1 biharmonic system:
///   r1 = kappa_1'
///   r2 = kappa_1^2 + kappa_2^2 - [(c+3)/4 - (c-1)/4 f^2 - (c-1)/(4 kappa_1^2) f'^2 + 3(c-1)/4 alpha^2]
///   r3 = kappa_2' - (c-1)/(4 kappa_1) f' eta(E_3) + 3(c-1)/4 alpha g(E_3, phi T)
///   r4 = kappa_2 kappa_3 - (c-1)/(4 kappa_1) f' eta(E_4) + 3(c-1)/4 alpha g(E_4, phi T)
/// Missing curvatures and scalars enter as zero. Throws CIsOne for c == 1.
struct SystemResiduals {
  std::array<double, 4> r{};
  /// Set when order < 4, i.e. some terms were taken as zero.
  bool truncated = false;
  double max_abs() const noexcept;
};

SystemResiduals system_residuals(const FrenetData& fd, const StructureScalars& ss, double c);

/// Constancy residual of kappa_1 over a verification window: sample standard
/// deviation divided by the mean.
double kappa_constancy(std::span<const double> kappa1_samples);

/// max |nabla_T^3 T + lambda H|, i.e. the defect of Delta H = lambda H with
/// Delta = -nabla_T^2 on the curve.
double laplacian_eigen_check(const Jet4& j, const CovariantJet& cj, double lambda);

/// Eigenvalue predicted for curves with nabla_T T parallel to phi T.
inline double eigenvalue_parallel(double c, double cos2_beta0) { return c - (c - 1.0) * cos2_beta0; }
/// Eigenvalue predicted for curves with nabla_T T perpendicular to phi T.
inline double eigenvalue_perp(double c, double cos2_beta0) {
  return 0.25 * (c + 3.0 - (c - 1.0) * cos2_beta0);
}

}  // namespace sasaki
