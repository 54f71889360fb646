#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sasaki/finite_difference.hpp"
#include "sasaki/generators.hpp"

namespace sasaki {

/// Which eigenvalue formula the Laplacian check uses.
enum class ModeHint { None, Auto, Par, Perp };
ModeHint mode_hint_from_string(const std::string& s);
const char* to_string(ModeHint m) noexcept;

struct VerifyOptions {
  double c = -3.0;
  ModeHint mode = ModeHint::Auto;
  /// Analytic input: window [s0, s1]; defaults to two periods of the lowest
  /// frequency starting at 0.
  std::optional<double> s0, s1;
  int points = 100;
  /// Overrides the path default (1e-8 analytic, 1e-4 sampled).
  std::optional<double> threshold;
  FiniteDifferenceSpec fd;
};

inline constexpr double kAnalyticThreshold = 1e-8;
inline constexpr double kSampledThreshold = 1e-4;
inline constexpr double kAnalyticConstancyThreshold = 1e-7;

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  /// "<=" for upper bounds, ">=" for lower bounds.
  std::string relation = "<=";
  bool pass = false;
};

struct Stat {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

Stat stat_of(const std::vector<double>& v);

struct VerificationReport {
  std::string source;  // "analytic" | "sampled"
  double c = -3.0;
  double threshold = 0.0;
  double constancy_threshold = 0.0;
  double rank_tol = 0.0;
  double window_s0 = 0.0, window_s1 = 0.0;
  std::size_t points = 0;

  double unit_speed_max_dev = 0.0;
  double eta_t_mean = 0.0;
  double eta_t_max_dev = 0.0;
  std::array<Stat, 3> kappa{};
  int order_min = 0, order_max = 0;
  double alpha_mean = 0.0;
  double tau2_max = 0.0;
  /// max |g(tau_2, T)| and max |E_1 coefficient of the expansion|.
  double tangential_max = 0.0;
  double e1_coefficient_max = 0.0;
  /// r1 as window constancy of kappa_1, r2..r4 as pointwise maxima.
  std::array<double, 4> system_residuals{};
  bool system_evaluated = false;
  std::string mode = "none";
  std::optional<double> lambda;
  double eigen_residual = 0.0;
  double fprime_route_diff_max = 0.0;

  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool pass = false;
};

/// Evaluates every check on jets sampled along the window.
VerificationReport verify_jets(const std::vector<Jet4>& jets, const VerifyOptions& opts, bool sampled);
VerificationReport verify_analytic(const AnalyticCurve& curve, const VerifyOptions& opts = {});
VerificationReport verify_sampled(const SampledCurve& curve, const VerifyOptions& opts = {});

nlohmann::json to_json(const VerificationReport& r);

}  // namespace sasaki
