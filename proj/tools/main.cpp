#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sasaki/commands.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/params_json.hpp"

namespace {

std::optional<sasaki::Span> span_from(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return sasaki::Span{v[0], v[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biharmonic curves in Sasakian space forms"};
  app.require_subcommand(1);
  int code = sasaki::kExitOk;

  std::uint64_t seed = 42;
  auto* selfcheck = app.add_subcommand("selfcheck", "Check model identities and the tau_2 expansion");
  selfcheck->add_option("--seed", seed, "Random seed")->capture_default_str();
  selfcheck->callback([&] { code = sasaki::cmd_selfcheck(seed, std::cout); });

  sasaki::GenerateArgs gen;
  std::string gen_kind;
  std::vector<double> gen_span;
  auto* generate = app.add_subcommand("generate", "Write an explicit curve as CSV");
  generate->add_option("--kind", gen_kind, "perp-circle | par-circle | par-helix");
  generate->add_option("--params", gen.params_file, "Params JSON")->required();
  generate->add_option("--span", gen_span, "s0 s1")->expected(2);
  generate->add_option("--samples", gen.samples, "Number of rows")->capture_default_str();
  generate->add_option("-o,--out", gen.out, "Output CSV")->required();
  generate->add_flag("--jets", gen.jets, "Also write <out>.jets.json");
  generate->callback([&] {
    if (!gen_kind.empty()) gen.kind = gen_kind;
    gen.span = span_from(gen_span);
    code = sasaki::cmd_generate(gen, std::cout, std::cerr);
  });

  sasaki::VerifyArgs ver;
  std::string ver_mode = "auto";
  std::vector<double> ver_window;
  double ver_threshold = 0.0;
  auto* verify = app.add_subcommand("verify", "Check biharmonicity of a CSV or params file");
  verify->add_option("input", ver.input, "CSV samples or params JSON")->required();
  verify->add_option("--c", ver.options.c, "phi-sectional curvature")->capture_default_str();
  verify->add_option("--mode", ver_mode, "none | auto | par | perp")->capture_default_str();
  verify->add_option("--window", ver_window, "s0 s1 (analytic input)")->expected(2);
  verify->add_option("--points", ver.options.points, "Evaluation points")->capture_default_str();
  auto* thr = verify->add_option("--threshold", ver_threshold, "Override the check threshold");
  verify->add_option("--stride", ver.options.fd.stride, "Finite-difference stride (0 = auto)");
  verify->add_option("--report", ver.report_out, "Report JSON path (default stdout)");
  verify->callback([&] {
    try {
      ver.options.mode = sasaki::mode_hint_from_string(ver_mode);
    } catch (const sasaki::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      code = sasaki::kExitInput;
      return;
    }
    if (!ver_window.empty()) {
      ver.options.s0 = ver_window[0];
      ver.options.s1 = ver_window[1];
    }
    if (*thr) ver.options.threshold = ver_threshold;
    code = sasaki::cmd_verify(ver, std::cout, std::cerr);
  });

  sasaki::ClassifyArgs cls;
  std::string cls_sign;
  double b0 = 0, b0c2 = 0, b1 = 0, b2 = 0, k1 = 0, k2 = 0, k3 = 0;
  auto* classify = app.add_subcommand("classify", "Admissible curvatures for given angles");
  classify->add_option("--c", cls.c, "phi-sectional curvature")->required();
  classify->add_option("--mode", cls.mode, "perp | par | constant-angle")->capture_default_str();
  auto* o_b0 = classify->add_option("--beta0", b0, "Contact angle (radians)");
  auto* o_b0c2 = classify->add_option("--beta0-cos2", b0c2, "cos^2 of the contact angle");
  auto* o_b1 = classify->add_option("--beta1", b1, "Contact angle, constant-angle case");
  auto* o_b2 = classify->add_option("--beta2", b2, "phi T distribution angle");
  classify->add_option("--sign", cls_sign, "Branch: + or -");
  auto* o_k1 = classify->add_option("--kappa1", k1, "kappa_1 (c = 1)");
  auto* o_k2 = classify->add_option("--kappa2", k2, "kappa_2 (c = 1)");
  auto* o_k3 = classify->add_option("--kappa3", k3, "kappa_3 (c = 1)");
  classify->add_flag("--brute-force", cls.brute_force, "Add the grid-scan oracle");
  classify->callback([&] {
    if (*o_b0) cls.beta0 = b0;
    if (*o_b0c2) cls.beta0_cos2 = b0c2;
    if (*o_b1) cls.beta1 = b1;
    if (*o_b2) cls.beta2 = b2;
    if (*o_k1) cls.kappa1 = k1;
    if (*o_k2) cls.kappa2 = k2;
    if (*o_k3) cls.kappa3 = k3;
    if (!cls_sign.empty()) {
      try {
        cls.sign = sasaki::parse_sign(cls_sign);
      } catch (const sasaki::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = sasaki::kExitInput;
        return;
      }
    }
    code = sasaki::cmd_classify(cls, std::cout, std::cerr);
  });

  sasaki::OdeArgs ode;
  std::vector<double> ode_span;
  auto* odegen = app.add_subcommand("ode-generate", "Integrate the frame ODE and write CSV");
  odegen->add_option("--params", ode.params_file, "Params JSON")->required();
  odegen->add_option("--step", ode.h, "RK4 step h")->capture_default_str();
  odegen->add_option("--span", ode_span, "s0 s1")->expected(2);
  odegen->add_option("-o,--out", ode.out, "Output CSV")->required();
  odegen->callback([&] {
    if (auto s = span_from(ode_span)) ode.span = *s;
    code = sasaki::cmd_ode_generate(ode, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sasaki::kExitInput;
  }
  return code;
}
