#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sasaki {

/// Angles of the constant-angle families. beta0 is the contact angle,
/// (beta1, beta2) parametrize the order-4 constant-angle case.
struct AngleParams {
  std::optional<double> beta0;
  std::optional<double> beta1;
  std::optional<double> beta2;
  /// +1 or -1; absent means "all branches".
  std::optional<int> sign;

  static constexpr double kExclusionMargin = 1e-9;

  /// beta0 in (0, 2pi) minus {pi/2, pi, 3pi/2}; beta1 in (0, pi) minus {pi/2};
  /// beta2 in (0, 2pi); sign in {+1, -1}. Throws InadmissibleAngle or
  /// MalformedInput.
  void validate() const;

  /// beta0 in (0, pi/2) with the given cos^2.
  static double beta0_from_cos2(double cos2);
};

enum class SolutionKind { Circle, Helix, Order4 };
const char* to_string(SolutionKind k) noexcept;

struct CurveSolution {
  SolutionKind kind = SolutionKind::Circle;
  std::string label;
  std::optional<double> kappa1;
  std::optional<double> kappa2;
  std::optional<double> kappa3;
  /// Families constrained only through kappa_1^2 + kappa_2^2 and/or kappa_2 kappa_3.
  std::optional<double> kappa_sq_sum;
  std::optional<double> kappa2_kappa3;
  /// Branch that produced the solution (0 when branch-free).
  int sign = 0;
  /// Double root of the curvature quadratic.
  bool boundary = false;
};

struct NamedResidual {
  std::string name;
  double value = 0.0;
};

struct ClassificationResult {
  std::vector<CurveSolution> solutions;
  /// Residuals of the defining equations at the returned values.
  std::vector<NamedResidual> constraints;
  std::vector<std::string> notes;
  /// Conditions on the ambient space, e.g. "n >= 2".
  std::vector<std::string> requirements;

  bool admissible() const noexcept { return !solutions.empty(); }
  /// "circle", "helix", "order4" for the first solution, else "inadmissible".
  std::string kind() const;
};

inline constexpr double kPositivityTol = 1e-12;

/// c = 1: circles with kappa_1 = 1 or helices with kappa_1^2 + kappa_2^2 = 1
/// (kappa_3 must vanish).
ClassificationResult classify_c1(double kappa1, std::optional<double> kappa2,
                                 std::optional<double> kappa3 = std::nullopt);

/// H perpendicular to phi T: kappa_1^2 + kappa_2^2 = (c+3)/4 - (c-1)/4 cos^2 beta0.
ClassificationResult admissible_perp(double c, const AngleParams& angles);

/// H parallel to phi T: kappa_1^2 + sigma sin(2 beta0) kappa_1 + (1-c) sin^4 beta0 = 0,
/// kappa_2 = |kappa_1 cot beta0 + sigma|.
ClassificationResult admissible_par(double c, const AngleParams& angles);

/// phi T = sin beta1 cos beta2 E_2 + sin beta1 sin beta2 E_4 (cases a, b, c).
ClassificationResult admissible_constant_angle(double c, const AngleParams& angles);

enum class Mode { Perp, Par };
const char* to_string(Mode m) noexcept;

struct GridSpec {
  double kappa_max = 4.0;
  int points = 4001;
};

/// Scans kappa_1 over (0, kappa_max], evaluating the biharmonic system with
/// the mode's structure scalars (perp: alpha = 0, kappa_2 = 0; par:
/// alpha = sigma sin beta0, kappa_2 = |kappa_1 cot beta0 + sigma|), and refines
/// every sign change or near-zero minimum. Throws GridTooCoarse when the best
/// point is the upper end of the grid.
ClassificationResult brute_force_admissible(double c, Mode mode, double beta0,
                                            std::optional<int> sign = std::nullopt,
                                            const GridSpec& grid = {});

}  // namespace sasaki
