#include "sasaki/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sasaki/bitension.hpp"
#include "sasaki/errors.hpp"

namespace sasaki {

FrameVector random_frame_vector(Rng& rng, Dimension n) {
  FrameVector v(n);
  for (auto& x : v.a) x = rng.uniform(-1.0, 1.0);
  for (auto& x : v.b) x = rng.uniform(-1.0, 1.0);
  v.f = rng.uniform(-1.0, 1.0);
  return v;
}

AnalyticCurve random_rotation_fixture(Rng& rng) {
  const int n = rng.integer(1, 3);
  const double f = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.1, 0.9);
  std::vector<double> rho(static_cast<std::size_t>(n)), theta(rho.size()), omega(rho.size());
  double norm2 = 0.0;
  for (auto& r : rho) {
    r = rng.uniform(0.2, 1.0);
    norm2 += r * r;
  }
  const double scale = std::sqrt((1.0 - f * f) / norm2);
  for (auto& r : rho) r *= scale;
  const bool common = rng.uniform() < 0.5;
  const double w0 = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.3, 2.5);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    theta[i] = rng.uniform(0.0, 6.283185307179586);
    omega[i] = common ? w0 : (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.3, 2.5);
  }
  // Rounding can leave the norm a few ulps off.
  double sum = 0.0;
  for (double r : rho) sum += r * r;
  rho.back() = std::sqrt(std::max(0.0, rho.back() * rho.back() + (1.0 - f * f) - sum));
  return gen_rotation_fixture(rho, omega, theta, f);
}

double expansion_direct_gap(const AnalyticCurve& curve, double c, int points) {
  double gap = 0.0;
  for (int i = 0; i < points; ++i) {
    const Jet4 j = eval_jet(curve, 10.0 * i / std::max(1, points - 1));
    const PointGeometry pg = analyze_point(j);
    if (pg.frenet.order < 2) continue;
    CurvatureDerivatives d;
    d.kappa1_prime = pg.frenet.kappa1_prime;
    d.kappa2_prime = pg.frenet.kappa2_prime;
    const BitensionExpansion ex = bitension_expansion(pg.frenet, pg.scalars, d, c, phi_frame(j.t));
    gap = std::max(gap, (ex.value - bitension_direct(j, pg.cov, c)).max_abs());
  }
  return gap;
}

std::string SelfcheckReport::summary() const {
  std::ostringstream os;
  char buf[160];
  for (const auto& it : items) {
    std::snprintf(buf, sizeof buf, "%-24s max_error %.3e  tol %.1e  %s\n", it.name.c_str(), it.max_error,
                  it.tolerance, it.pass ? "PASS" : "FAIL");
    os << buf;
  }
  os << (pass ? "selfcheck: all identities hold\n" : "selfcheck: FAILED at " + first_failure + "\n");
  return os.str();
}

SelfcheckReport run_selfcheck(const SelfcheckOptions& opts) {
  Rng rng(opts.seed);
  SelfcheckReport rep;
  auto record = [&](const char* name, double err, double tol) {
    rep.items.push_back({name, err, tol, err <= tol});
  };
  const ConnectionFn gamma = opts.gamma;

  double phi2 = 0.0, phi_metric = 0.0, eta_xi = 0.0, compat = 0.0, nabla_xi = 0.0, oracle = 0.0, phi_sec = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const Dimension dim(n);
    const FrameVector xi = FrameVector::xi(dim);
    eta_xi = std::max(eta_xi, std::abs(eta_frame(xi) - 1.0));
    for (int k = 0; k < opts.samples_per_dimension; ++k) {
      const FrameVector u = random_frame_vector(rng, dim);
      const FrameVector v = random_frame_vector(rng, dim);
      const FrameVector w = random_frame_vector(rng, dim);

      phi2 = std::max(phi2, (phi_frame(phi_frame(u)) - (-u + eta_frame(u) * xi)).max_abs());
      phi_metric = std::max(
          phi_metric, std::abs(g_frame(phi_frame(u), phi_frame(v)) - g_frame(u, v) + eta_frame(u) * eta_frame(v)));
      compat = std::max(compat, std::abs(g_frame(gamma(u, v), w) + g_frame(v, gamma(u, w))));
      nabla_xi = std::max(nabla_xi, (gamma(u, xi) + phi_frame(u)).max_abs());

      const FrameVector r_form = curvature_space_form(-3.0, u, v, w);
      const FrameVector r_conn = curvature_from_connection(gamma, u, v, w);
      oracle = std::max(oracle, (r_conn - r_form).max_abs() / std::max(1.0, r_form.max_abs()));

      FrameVector x = u;
      x.f = 0.0;
      x *= 1.0 / norm(x);
      const FrameVector px = phi_frame(x);
      phi_sec = std::max(phi_sec, std::abs(g_frame(curvature_from_connection(gamma, x, px, px), x) + 3.0));
    }
  }
  record("phi_squared", phi2, 1e-14);
  record("phi_metric", phi_metric, 1e-14);
  record("eta_xi", eta_xi, 1e-14);
  record("metric_compatibility", compat, 1e-12);
  record("nabla_xi", nabla_xi, 1e-14);
  record("curvature_oracle", oracle, 1e-12);
  record("phi_sectional", phi_sec, 1e-10);

  double gap = 0.0;
  for (int k = 0; k < opts.fixtures; ++k) {
    const AnalyticCurve fx = random_rotation_fixture(rng);
    gap = std::max(gap, expansion_direct_gap(fx, -3.0));
  }
  record("expansion_vs_direct", gap, 1e-10);

  rep.pass = true;
  for (const auto& it : rep.items) {
    if (!it.pass) {
      rep.pass = false;
      rep.first_failure = it.name;
      break;
    }
  }
  return rep;
}

}  // namespace sasaki
