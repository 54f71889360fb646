#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sasaki/model.hpp"
#include "sasaki/ode.hpp"
#include "sasaki/verify.hpp"

namespace sasaki {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInput = 2 };

int cmd_selfcheck(std::uint64_t seed, std::ostream& out, ConnectionFn gamma = &connection);

struct GenerateArgs {
  /// Overrides the params file's kind when set; must agree with it otherwise.
  std::optional<std::string> kind;
  std::string params_file;
  /// Defaults to [0, two periods of the lowest frequency].
  std::optional<Span> span;
  int samples = 256;
  std::string out;
  /// Also writes analytic jets to `<out>.jets.json`.
  bool jets = false;
};
int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  /// CSV samples, or a params JSON (by `.json` extension) for the analytic path.
  std::string input;
  VerifyOptions options;
  /// Report destination; "-" or empty writes to `out`.
  std::string report_out;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct ClassifyArgs {
  double c = -3.0;
  /// "perp", "par" or "constant-angle"; ignored for c = 1.
  std::string mode = "par";
  std::optional<double> beta0, beta0_cos2, beta1, beta2;
  std::optional<int> sign;
  std::optional<double> kappa1, kappa2, kappa3;
  /// Adds the grid-scan oracle to the output (perp and par only).
  bool brute_force = false;
};
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);

struct OdeArgs {
  std::string params_file;
  double h = 1e-3;
  Span span;
  std::string out;
};
int cmd_ode_generate(const OdeArgs& args, std::ostream& out, std::ostream& err);

}  // namespace sasaki
