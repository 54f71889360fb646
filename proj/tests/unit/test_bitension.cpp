#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sasaki/bitension.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/rng.hpp"
#include "sasaki/selfcheck.hpp"

using namespace sasaki;
using namespace sasaki::testing;

namespace {

double tau2_max(const AnalyticCurve& c, double c_form = -3.0, int points = 100) {
  const double period = 2.0 * M_PI / c.lowest_frequency();
  double m = 0.0;
  for (int k = 0; k < points; ++k) {
    const Jet4 j = eval_jet(c, 2.0 * period * k / (points - 1));
    m = std::max(m, bitension_direct(j, covariant_jet(j), c_form).max_abs());
  }
  return m;
}

}  // namespace

TEST_CASE("direct tau_2 with the space form equals the model connection at c = -3") {
  const AnalyticCurve c = tilted_fixture();
  for (double s : {0.1, 1.4, 2.9}) {
    const Jet4 j = eval_jet(c, s);
    const CovariantJet cj = covariant_jet(j);
    CHECK((bitension_direct(j, cj, -3.0) - bitension_direct_model(j, cj)).max_abs() <= 1e-13);
  }
}

TEST_CASE("expansion equals direct on a curve with varying eta(T) and kappa_1") {
  // kappa_1'' has no closed form here; it comes from an 8th-order difference.
  const AnalyticCurve c = tilted_fixture();
  auto k1 = [&](double u) { return analyze_point(eval_jet(c, u)).frenet.kappa[0]; };
  for (double s : {0.35, 1.2, 2.6}) {
    const PointGeometry g = analyze_point(eval_jet(c, s));
    REQUIRE(g.frenet.order >= 2);
    CurvatureDerivatives d{g.frenet.kappa1_prime, fd8(k1, s, 1e-3, 2), g.frenet.kappa2_prime};
    const auto ex = bitension_expansion(g.frenet, g.scalars, d, -3.0, phi_frame(g.jet.t));
    const FrameVector direct = bitension_direct(g.jet, g.cov, -3.0);
    CHECK((ex.value - direct).max_abs() <= 1e-6);
    CHECK(std::abs(ex.eta - direct.f) <= 1e-6);
  }
}

TEST_CASE("tangential component of tau_2 is -3 kappa_1 kappa_1'") {
  const AnalyticCurve c = tilted_fixture();
  for (double s : {0.5, 1.8}) {
    const PointGeometry g = analyze_point(eval_jet(c, s));
    const FrameVector t2 = bitension_direct(g.jet, g.cov, -3.0);
    CHECK(g_frame(t2, g.jet.t) ==
          doctest::Approx(-3.0 * g.frenet.kappa[0] * g.frenet.kappa1_prime).epsilon(1e-10));
  }
}

TEST_CASE("expansion equals direct on seeded rotation fixtures for several c") {
  Rng rng(42);
  for (int k = 0; k < 20; ++k) {
    const AnalyticCurve c = random_rotation_fixture(rng);
    for (double cf : {-3.0, -1.0, 2.5}) CHECK(expansion_direct_gap(c, cf) <= 1e-10);
  }
}

TEST_CASE("explicit solutions are biharmonic, the negative controls are not") {
  CHECK(tau2_max(generate(par_circle_params())) <= 1e-8);
  CHECK(tau2_max(generate(par_helix_params())) <= 1e-8);
  const double perturbed = tau2_max(scale_rates(generate(par_circle_params()), 1.1));
  CHECK(perturbed == doctest::Approx(oracle::kPerturbedTau2).epsilon(1e-6));
  const double rot = tau2_max(rotation_03());
  CHECK(rot == doctest::Approx(oracle::kRotationTau2).epsilon(1e-6));
}

TEST_CASE("system residuals vanish on the helix and on the par circle") {
  for (const auto& c : {generate(par_helix_params()), generate(par_circle_params())}) {
    const PointGeometry g = analyze_point(eval_jet(c, 0.9));
    const SystemResiduals r = system_residuals(g.frenet, g.scalars, -3.0);
    CHECK(r.max_abs() <= 1e-12);
    CHECK(r.truncated);
  }
}

TEST_CASE("r2 sign follows LHS minus RHS") {
  // At c = -3 the bracket reduces to f^2 - 3 alpha^2 when f' = 0.
  const PointGeometry g = analyze_point(eval_jet(rotation_03(), 0.0));
  const double k1 = g.frenet.kappa[0], k2 = g.frenet.kappa_or_zero(2);
  const double f = g.scalars.f, a = g.scalars.alpha;
  const double expect = k1 * k1 + k2 * k2 - (f * f - 3.0 * a * a);
  CHECK(expect > 0.0);
  CHECK(system_residuals(g.frenet, g.scalars, -3.0).r[1] == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("errors: c = 1 and geodesics") {
  const PointGeometry g = analyze_point(eval_jet(generate(par_helix_params()), 0.0));
  CHECK_THROWS_AS(system_residuals(g.frenet, g.scalars, 1.0), Error);
  const AnalyticCurve line = curve_from_frame(1, {TrigPoly()}, {TrigPoly()}, TrigPoly(1.0), {0.0}, {0.0}, 0.0);
  const PointGeometry gl = analyze_point(eval_jet(line, 0.0));
  CHECK_THROWS_AS(system_residuals(gl.frenet, gl.scalars, -3.0), Error);
  CHECK_THROWS_AS(bitension_expansion(gl.frenet, gl.scalars, {}, -3.0, phi_frame(gl.jet.t)), Error);
}

TEST_CASE("Laplacian eigenvalue on the helix") {
  const AnalyticCurve c = generate(par_helix_params());
  CHECK(eigenvalue_parallel(-3.0, 0.9) == doctest::Approx(0.6));
  for (double s : {0.0, 2.0, 7.0}) {
    const Jet4 j = eval_jet(c, s);
    CHECK(laplacian_eigen_check(j, covariant_jet(j), 0.6) <= 1e-12);
  }
}

TEST_CASE("kappa constancy") {
  const double same[] = {0.5, 0.5, 0.5};
  CHECK(kappa_constancy(same) == 0.0);
  const double varied[] = {1.0, 2.0, 3.0};
  CHECK(kappa_constancy(varied) == doctest::Approx(0.5));
}
