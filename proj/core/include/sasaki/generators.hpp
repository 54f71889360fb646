#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sasaki/frenet.hpp"
#include "sasaki/trig_poly.hpp"

namespace sasaki {

enum class CurveKind { PerpCircle, ParCircle, ParHelix, Rotation, Frame };

const char* to_string(CurveKind k) noexcept;
/// Accepts "perp-circle", "par-circle", "par-helix"; throws MalformedInput.
CurveKind curve_kind_from_string(const std::string& s);

/// Constants of the explicit solutions. Vectors left empty are zero.
struct GeneratorParams {
  CurveKind kind = CurveKind::ParCircle;
  int n = 2;
  /// Contact angle in radians. For par-circle only cos(beta0)'s sign is used
  /// unless `sign` is given.
  std::optional<double> beta0;
  /// Alternative to beta0: cos^2(beta0), with beta0 taken in (0, pi/2).
  std::optional<double> beta0_cos2;
  /// Branch of the +- in the explicit solutions; defaults depend on the kind.
  std::optional<int> sign;
  /// par-helix: which positive root of the curvature quadratic; the larger one
  /// when absent.
  std::optional<double> kappa1;
  std::vector<double> c1, c2, d1, d2, a, b;
  double z0 = 0.0;

  /// Zero-fills absent vectors and checks their lengths against n.
  void normalize();
};

/// Unit-speed curve with closed-form frame components of T and coordinates.
struct AnalyticCurve {
  int n = 1;
  std::vector<TrigPoly> x, y;
  TrigPoly z;
  /// Frame components of T: ta[i] along X_i, tb[i] along X_{n+i}, tf along xi.
  std::vector<TrigPoly> ta, tb;
  TrigPoly tf;
  GeneratorParams meta;

  /// Smallest positive frequency present in T (0 for a straight line).
  double lowest_frequency() const noexcept;
  CoordPoint point(double s) const;
};

/// Resolved constants of a generated curve that downstream checks compare with.
struct CurveConstants {
  double cos_beta0 = 0.0;
  double sin_beta0 = 0.0;
  int sign = 1;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  /// Angular rate of (T_i + i T_{n+i}); zero for perp circles.
  double rate = 0.0;
};

CurveConstants resolve_constants(const GeneratorParams& p);

/// Builds coordinates from frame components of T by exact antidifferentiation
/// of dx = 2 T_b, dy = 2 T_a, dz = 2 f + sum y dx. (a, b, z0) are added as
/// integration constants to the zero-phase antiderivatives.
/// Throws NotRepresentable when a coordinate would need s^2 terms.
AnalyticCurve curve_from_frame(int n, std::vector<TrigPoly> ta, std::vector<TrigPoly> tb, TrigPoly tf,
                               const std::vector<double>& a, const std::vector<double>& b, double z0);

/// Circles with H perpendicular to phi T (kappa_1 = |cos beta0|, n >= 2).
AnalyticCurve gen_circle_perp(GeneratorParams p);
/// Circles with H parallel to phi T.
AnalyticCurve gen_circle_par(GeneratorParams p);
/// Helices with H parallel to phi T.
AnalyticCurve gen_helix_par(GeneratorParams p);
/// Dispatches on p.kind.
AnalyticCurve generate(const GeneratorParams& p);

/// T_i + i T_{n+i} = rho_i exp(i (omega s + theta_i)), eta(T) = f.
/// Throws NormViolated unless sum rho_i^2 = 1 - f^2 and 0 < |f| < 1.
AnalyticCurve gen_rotation_fixture(const std::vector<double>& rho, double omega,
                                   const std::vector<double>& theta, double f);
/// Same with one rate per component.
AnalyticCurve gen_rotation_fixture(const std::vector<double>& rho, const std::vector<double>& omegas,
                                   const std::vector<double>& theta, double f);

Jet4 eval_jet(const AnalyticCurve& curve, double s);

/// Largest coefficient mismatch of dgamma/ds against frame_to_coord(T) and of
/// g(T,T) - 1, both as TrigPoly identities.
struct IdentityDefects {
  double velocity = 0.0;
  double unit_speed = 0.0;
};
IdentityDefects identity_defects(const AnalyticCurve& curve);

/// Coordinate block as printed alongside the explicit solutions, transcribed
/// term by term for comparison.
struct PrintedBlock {
  std::vector<TrigPoly> x, y;
  TrigPoly z;
};
PrintedBlock printed_block(const GeneratorParams& p);

struct BlockDiff {
  std::string coordinate;  // "x1", "y2", "z", ...
  CoefficientDiff diff;
};
/// Coefficient-level differences between the printed block and the
/// constructed coordinates (integration constants ignored).
std::vector<BlockDiff> compare_printed_block(const AnalyticCurve& curve, double tol = 1e-10);

}  // namespace sasaki
