#include "sasaki/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sasaki/bitension.hpp"
#include "sasaki/errors.hpp"

namespace sasaki {

ModeHint mode_hint_from_string(const std::string& s) {
  if (s == "none") return ModeHint::None;
  if (s == "auto") return ModeHint::Auto;
  if (s == "par") return ModeHint::Par;
  if (s == "perp") return ModeHint::Perp;
  throw Error(ErrorCode::MalformedInput, "mode must be none, auto, par or perp");
}

const char* to_string(ModeHint m) noexcept {
  switch (m) {
    case ModeHint::None: return "none";
    case ModeHint::Auto: return "auto";
    case ModeHint::Par: return "par";
    case ModeHint::Perp: return "perp";
  }
  return "?";
}

Stat stat_of(const std::vector<double>& v) {
  Stat st;
  st.count = v.size();
  if (v.empty()) return st;
  double sum = 0.0;
  st.min = st.max = v.front();
  for (double x : v) {
    sum += x;
    st.min = std::min(st.min, x);
    st.max = std::max(st.max, x);
  }
  st.mean = sum / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - st.mean) * (x - st.mean);
    st.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return st;
}

VerificationReport verify_jets(const std::vector<Jet4>& jets, const VerifyOptions& opts, bool sampled) {
  if (jets.empty()) throw Error(ErrorCode::TooFewSamples, "no evaluation points");
  VerificationReport r;
  r.source = sampled ? "sampled" : "analytic";
  r.c = opts.c;
  r.threshold = opts.threshold.value_or(sampled ? kSampledThreshold : kAnalyticThreshold);
  r.constancy_threshold = sampled ? r.threshold : kAnalyticConstancyThreshold;
  r.rank_tol = sampled ? kSampledThreshold : FrenetOptions{}.rank_tol;
  r.window_s0 = jets.front().s;
  r.window_s1 = jets.back().s;
  r.points = jets.size();

  FrenetOptions fo;
  fo.rank_tol = r.rank_tol;
  fo.unit_speed_tol = 0.5;  // reported by the unit-speed check instead

  struct PointData {
    CovariantJet cj;
    FrenetData fd;
    StructureScalars ss;
    FrameVector tau2;
  };
  std::vector<PointData> pts;
  pts.reserve(jets.size());
  std::vector<double> fs, k[3], alphas;
  bool degenerate = false;
  r.order_min = 5;
  for (const auto& j : jets) {
    r.unit_speed_max_dev = std::max(r.unit_speed_max_dev, std::abs(g_frame(j.t, j.t) - 1.0));
    fs.push_back(j.t.f);
    PointData pd;
    pd.cj = covariant_jet(j);
    try {
      pd.fd = frenet_apparatus(j, pd.cj, fo);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateFrame && e.code() != ErrorCode::NotUnitSpeed) throw;
      if (!degenerate) r.notes.push_back("s = " + std::to_string(j.s) + ": " + e.what());
      degenerate = true;
      continue;
    }
    pd.ss = structure_scalars(j, pd.fd);
    pd.tau2 = bitension_direct(j, pd.cj, opts.c);
    r.order_min = std::min(r.order_min, pd.fd.order);
    r.order_max = std::max(r.order_max, pd.fd.order);
    for (std::size_t i = 0; i < pd.fd.kappa.size(); ++i) k[i].push_back(pd.fd.kappa[i]);
    alphas.push_back(pd.ss.alpha);
    r.tau2_max = std::max(r.tau2_max, norm(pd.tau2));
    r.tangential_max = std::max(r.tangential_max, std::abs(g_frame(pd.tau2, j.t)));
    if (pd.fd.order >= 2) {
      const double e1 = -3.0 * pd.fd.kappa[0] * pd.fd.kappa1_prime +
                        (opts.c - 1.0) / 4.0 * pd.ss.f * pd.ss.fprime;
      r.e1_coefficient_max = std::max(r.e1_coefficient_max, std::abs(e1));
      r.fprime_route_diff_max =
          std::max(r.fprime_route_diff_max, std::abs(pd.ss.fprime - pd.ss.fprime_from_frame));
      if (opts.c != 1.0) {
        const SystemResiduals sr = system_residuals(pd.fd, pd.ss, opts.c);
        r.system_evaluated = true;
        for (int i = 1; i < 4; ++i) r.system_residuals[i] = std::max(r.system_residuals[i], std::abs(sr.r[i]));
      }
    }
    pts.push_back(std::move(pd));
  }
  if (r.order_max == 0) r.order_min = 0;

  const Stat fstat = stat_of(fs);
  r.eta_t_mean = fstat.mean;
  for (double f : fs) r.eta_t_max_dev = std::max(r.eta_t_max_dev, std::abs(f - fstat.mean));
  for (int i = 0; i < 3; ++i) r.kappa[static_cast<std::size_t>(i)] = stat_of(k[i]);
  r.alpha_mean = stat_of(alphas).mean;
  r.system_residuals[0] = kappa_constancy(k[0]);

  const double cos2 = fstat.mean * fstat.mean;
  ModeHint mode = opts.mode;
  if (mode == ModeHint::Auto && !alphas.empty()) {
    const double phi_norm = std::sqrt(std::max(0.0, 1.0 - cos2));
    const double tol = sampled ? 1e-3 : 1e-6;
    if (std::abs(std::abs(r.alpha_mean) - phi_norm) < tol) mode = ModeHint::Par;
    else if (std::abs(r.alpha_mean) < tol) mode = ModeHint::Perp;
    else mode = ModeHint::None;
  }
  if (mode == ModeHint::Par) r.lambda = eigenvalue_parallel(opts.c, cos2);
  if (mode == ModeHint::Perp) r.lambda = eigenvalue_perp(opts.c, cos2);
  r.mode = mode == ModeHint::Auto ? "none" : to_string(mode);
  if (r.lambda) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      r.eigen_residual = std::max(r.eigen_residual, (pts[i].cj.d3 + *r.lambda * pts[i].cj.h).max_abs());
    }
  }

  auto add = [&](std::string name, double value, double thr) {
    r.checks.push_back({std::move(name), value, thr, "<=", value <= thr});
  };
  auto add_min = [&](std::string name, double value, double thr) {
    r.checks.push_back({std::move(name), value, thr, ">=", value >= thr});
  };
  add("frame_defined", degenerate ? 1.0 : 0.0, 0.0);
  add("unit_speed", r.unit_speed_max_dev, r.threshold);
  add("eta_T_constant", r.eta_t_max_dev, r.threshold);
  // proper-biharmonic: kappa_1 bounded away from zero
  add_min("non_geodesic", k[0].size() == pts.size() && !pts.empty() ? r.kappa[0].min : 0.0, r.rank_tol);
  add("kappa1_constancy", r.system_residuals[0], r.constancy_threshold);
  add("tau2", r.tau2_max, r.threshold);
  if (r.system_evaluated) {
    add("system_residuals",
        std::max({r.system_residuals[1], r.system_residuals[2], r.system_residuals[3]}), r.threshold);
  } else if (opts.c == 1.0) {
    r.notes.push_back("c = 1: system residuals not evaluated; use classify --c 1");
  }
  if (r.lambda) add("laplacian_eigen", r.eigen_residual, r.threshold);
  if (r.fprime_route_diff_max > 1e-6) r.notes.push_back("f' routes disagree by more than 1e-6");

  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  return r;
}

VerificationReport verify_analytic(const AnalyticCurve& curve, const VerifyOptions& opts) {
  if (opts.points < 2) throw Error(ErrorCode::MalformedInput, "need at least 2 evaluation points");
  const double w = curve.lowest_frequency();
  const double s0 = opts.s0.value_or(0.0);
  const double s1 = opts.s1.value_or(s0 + (w > 0.0 ? 2.0 * 2.0 * std::numbers::pi / w : 1.0));
  std::vector<Jet4> jets;
  for (int i = 0; i < opts.points; ++i) {
    jets.push_back(eval_jet(curve, s0 + (s1 - s0) * i / (opts.points - 1)));
  }
  return verify_jets(jets, opts, false);
}

VerificationReport verify_sampled(const SampledCurve& curve, const VerifyOptions& opts) {
  if (opts.points < 2) throw Error(ErrorCode::MalformedInput, "need at least 2 evaluation points");
  const SampledJets sj(curve, opts.fd);
  const std::size_t first = sj.first_index(), last = sj.last_index();
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(opts.points), last - first + 1);
  std::vector<Jet4> jets;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t idx = count == 1 ? first : first + (last - first) * i / (count - 1);
    jets.push_back(sj.at(idx));
  }
  VerificationReport r = verify_jets(jets, opts, true);
  r.notes.push_back("finite differences: accuracy " + std::to_string(opts.fd.accuracy) + ", stride " +
                    std::to_string(sj.stride()));
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json kappa = json::array();
  for (const auto& s : r.kappa) {
    if (s.count == 0) break;
    kappa.push_back({{"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}, {"count", s.count}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"relation", c.relation},
                      {"verdict", c.pass ? "pass" : "fail"}});
  }
  json j = {
      {"source", r.source},
      {"c", r.c},
      {"thresholds", {{"check", r.threshold}, {"kappa1_constancy", r.constancy_threshold}, {"rank_tol", r.rank_tol}}},
      {"window", {{"s0", r.window_s0}, {"s1", r.window_s1}, {"points", r.points}}},
      {"unit_speed_max_dev", r.unit_speed_max_dev},
      {"eta_T_mean", r.eta_t_mean},
      {"eta_T_max_dev", r.eta_t_max_dev},
      {"kappa", kappa},
      {"osculating_order", {{"min", r.order_min}, {"max", r.order_max}}},
      {"alpha_mean", r.alpha_mean},
      {"tau2_max", r.tau2_max},
      {"tangential_component_max", r.tangential_max},
      {"e1_coefficient_max", r.e1_coefficient_max},
      {"mode", r.mode},
      {"eigen_residual", r.eigen_residual},
      {"checks", checks},
      {"notes", r.notes},
      {"verdict", r.pass ? "pass" : "fail"},
  };
  if (r.system_evaluated) {
    j["system_residuals"] = {{"r1_kappa1_constancy", r.system_residuals[0]},
                             {"r2", r.system_residuals[1]},
                             {"r3", r.system_residuals[2]},
                             {"r4", r.system_residuals[3]}};
  }
  j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
  return j;
}

}  // namespace sasaki
