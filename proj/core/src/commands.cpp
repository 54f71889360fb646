#include "sasaki/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "sasaki/classifier.hpp"
#include "sasaki/csv_io.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/params_json.hpp"
#include "sasaki/selfcheck.hpp"

namespace sasaki {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

void write_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  os << j.dump(2) << "\n";
}

nlohmann::json solution_json(const CurveSolution& s) {
  nlohmann::json j = {{"kind", to_string(s.kind)}, {"label", s.label}};
  auto opt = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  opt("kappa1", s.kappa1);
  opt("kappa2", s.kappa2);
  opt("kappa3", s.kappa3);
  opt("kappa1_sq_plus_kappa2_sq", s.kappa_sq_sum);
  opt("kappa2_kappa3", s.kappa2_kappa3);
  if (s.sign != 0) j["sign"] = s.sign;
  if (s.boundary) j["boundary"] = true;
  return j;
}

nlohmann::json result_json(const ClassificationResult& r) {
  nlohmann::json sols = nlohmann::json::array(), cons = nlohmann::json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_json(s));
  for (const auto& c : r.constraints) cons.push_back({{"name", c.name}, {"residual", c.value}});
  return {{"kind", r.kind()},       {"admissible", r.admissible()}, {"solutions", sols},
          {"constraints", cons},    {"notes", r.notes},             {"requirements", r.requirements}};
}

}  // namespace

int cmd_selfcheck(std::uint64_t seed, std::ostream& out, ConnectionFn gamma) {
  SelfcheckOptions opts;
  opts.seed = seed;
  opts.gamma = gamma;
  const SelfcheckReport rep = run_selfcheck(opts);
  out << "seed " << seed << "\n" << rep.summary();
  return rep.pass ? kExitOk : kExitFail;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    GeneratorParams p = read_params_file(args.params_file);
    if (args.kind) {
      const CurveKind k = curve_kind_from_string(*args.kind);
      if (k != p.kind) throw Error(ErrorCode::MalformedInput, "kind differs from the params file");
    }
    const AnalyticCurve curve = generate(p);
    Span span;
    if (args.span) {
      span = *args.span;
    } else {
      const double w = curve.lowest_frequency();
      span = {0.0, w > 0.0 ? 4.0 * std::numbers::pi / w : 1.0};
    }
    const SampledCurve samples = sample_curve(curve, span.s0, span.s1, args.samples);
    write_csv_file(args.out, samples);
    if (args.jets) {
      nlohmann::json jets = nlohmann::json::array();
      for (double s : samples.s) jets.push_back(jet_to_json(eval_jet(curve, s)));
      write_json({{"params", params_to_json(curve.meta)}, {"jets", jets}}, args.out + ".jets.json", out);
    }
    out << "wrote " << samples.size() << " samples to " << args.out << "\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    VerificationReport rep;
    if (ends_with(args.input, ".json")) {
      rep = verify_analytic(generate(read_params_file(args.input)), args.options);
    } else {
      rep = verify_sampled(read_csv_file(args.input), args.options);
    }
    write_json(to_json(rep), args.report_out, out);
    if (!args.report_out.empty() && args.report_out != "-") {
      out << "verdict " << (rep.pass ? "pass" : "fail") << ", tau2_max " << rep.tau2_max << "\n";
    }
    return static_cast<int>(rep.pass ? kExitOk : kExitFail);
  });
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ClassificationResult r;
    nlohmann::json extra;
    if (args.c == 1.0) {
      if (!args.kappa1) throw Error(ErrorCode::MalformedInput, "c = 1 needs --kappa1");
      r = classify_c1(*args.kappa1, args.kappa2, args.kappa3);
    } else {
      AngleParams angles;
      if (args.beta0 && args.beta0_cos2) throw Error(ErrorCode::MalformedInput, "give beta0 or beta0-cos2");
      angles.beta0 = args.beta0_cos2 ? std::optional(AngleParams::beta0_from_cos2(*args.beta0_cos2)) : args.beta0;
      angles.beta1 = args.beta1;
      angles.beta2 = args.beta2;
      angles.sign = args.sign;
      if (args.mode == "perp") {
        r = admissible_perp(args.c, angles);
      } else if (args.mode == "par") {
        r = admissible_par(args.c, angles);
      } else if (args.mode == "constant-angle") {
        r = admissible_constant_angle(args.c, angles);
      } else {
        throw Error(ErrorCode::MalformedInput, "mode must be perp, par or constant-angle");
      }
      if (args.brute_force && args.mode != "constant-angle") {
        const Mode m = args.mode == "perp" ? Mode::Perp : Mode::Par;
        extra = result_json(brute_force_admissible(args.c, m, *angles.beta0, angles.sign));
      }
    }
    nlohmann::json j = {{"c", args.c}, {"mode", args.c == 1.0 ? "c1" : args.mode}};
    j.update(result_json(r));
    if (!extra.is_null()) j["oracle"] = extra;
    out << j.dump(2) << "\n";
    return static_cast<int>(r.admissible() ? kExitOk : kExitFail);
  });
}

int cmd_ode_generate(const OdeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    double drift = 0.0;
    const SampledCurve c = gen_by_ode(read_params_file(args.params_file), args.h, args.span, &drift);
    write_csv_file(args.out, c);
    out << "wrote " << c.size() << " samples to " << args.out << ", max |g(T,T)-1| " << drift << "\n";
    return static_cast<int>(kExitOk);
  });
}

}  // namespace sasaki
