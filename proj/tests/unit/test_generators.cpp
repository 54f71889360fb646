#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sasaki/bitension.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/generators.hpp"
#include "sasaki/rng.hpp"
#include "sasaki/selfcheck.hpp"

using namespace sasaki;
using namespace sasaki::testing;

namespace {

PointGeometry at(const AnalyticCurve& c, double s) { return analyze_point(eval_jet(c, s)); }

double tau2_at(const AnalyticCurve& c, double s) {
  const Jet4 j = eval_jet(c, s);
  return bitension_direct(j, covariant_jet(j), -3.0).max_abs();
}

}  // namespace

TEST_CASE("generated curves satisfy the velocity and unit-speed identities") {
  for (const auto& p : {perp_params(), par_circle_params(), par_helix_params()}) {
    const AnalyticCurve c = generate(p);
    const IdentityDefects d = identity_defects(c);
    CHECK(d.velocity <= 1e-14);
    CHECK(d.unit_speed <= 1e-14);
  }
  const IdentityDefects d = identity_defects(tilted_fixture());
  CHECK(d.velocity <= 1e-14);
  CHECK(d.unit_speed <= 1e-14);
}

TEST_CASE("par circle values") {
  const AnalyticCurve c = generate(par_circle_params());
  CHECK(c.tf.terms().empty());
  CHECK(std::abs(c.tf.c0()) == doctest::Approx(std::sqrt((1.0 + std::sqrt(5.0)) / 4.0)).epsilon(1e-14));
  const auto g = at(c, 1.0);
  CHECK(g.frenet.kappa[0] == doctest::Approx(oracle::kParCircleKappa1).epsilon(1e-12));
  CHECK(g.frenet.kappa[0] == doctest::Approx(std::sqrt(std::sqrt(5.0) - 2.0)).epsilon(1e-12));
  CHECK(g.scalars.alpha == doctest::Approx(oracle::kParCircleAlpha).epsilon(1e-12));
  CHECK(g.frenet.order == 2);
  CHECK(tau2_at(c, 1.0) <= 1e-14);
}

TEST_CASE("par helix values") {
  const AnalyticCurve c = generate(par_helix_params());
  const auto g = at(c, 2.5);
  const double k1 = (3.0 + std::sqrt(5.0)) / 10.0;
  CHECK(g.frenet.kappa[0] == doctest::Approx(k1).epsilon(1e-12));
  CHECK(g.frenet.kappa[1] == doctest::Approx(std::abs(3.0 * k1 - 1.0)).epsilon(1e-12));
  const CurveConstants cc = resolve_constants(par_helix_params());
  CHECK(cc.kappa1 == doctest::Approx(k1));
  CHECK(cc.sign == -1);
}

TEST_CASE("par helix smaller root via kappa1") {
  GeneratorParams p = par_helix_params();
  p.kappa1 = (3.0 - std::sqrt(5.0)) / 10.0;
  const AnalyticCurve c = generate(p);
  CHECK(at(c, 0.4).frenet.kappa[0] == doctest::Approx(*p.kappa1).epsilon(1e-12));
  CHECK(tau2_at(c, 0.4) <= 1e-13);
  p.kappa1 = 0.3;
  CHECK_THROWS_AS(generate(p), Error);
}

TEST_CASE("perp-circle family: values from the oracle") {
  const AnalyticCurve c = generate(perp_params());
  CHECK(c.tf.terms().empty());
  CHECK(std::abs(c.tf.c0() - 0.5) <= 1e-15);
  const auto g = at(c, 0.7);
  CHECK(g.frenet.kappa[0] == doctest::Approx(oracle::kPerpKappa1).epsilon(1e-12));
  CHECK(g.scalars.alpha == doctest::Approx(oracle::kPerpAlpha).epsilon(1e-12));
  double m = 0.0;
  for (int k = 0; k < 50; ++k) m = std::max(m, tau2_at(c, 0.3 * k));
  CHECK(m == doctest::Approx(oracle::kPerpTau2).epsilon(1e-9));
}

TEST_CASE("perp circle parameter validation") {
  GeneratorParams p = perp_params();
  p.c1 = {0.8, 0.0};
  try {
    generate(p);
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.constraint().find("norm") != std::string::npos);
    CHECK(e.residual() == doctest::Approx(0.64 - 0.75));
  }
  p = perp_params();
  p.d1 = {0.1, 0.0};
  p.c1 = {std::sqrt(0.74), 0.0};
  try {
    generate(p);
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.constraint().find("orthogonality") != std::string::npos);
  }
  p = perp_params();
  p.n = 1;
  p.c1 = {std::sqrt(3.0) / 2.0};
  try {
    generate(p);
    FAIL("expected BadDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadDimension);
  }
}

TEST_CASE("par circle parameter validation") {
  GeneratorParams p = par_circle_params();
  p.c1 = {0.309, 0.0};
  CHECK_THROWS_AS(generate(p), ConstraintError);
  p.c1 = {0.3, 0.0, 0.0};
  CHECK_THROWS_AS(generate(p), Error);  // length does not match n
}

TEST_CASE("par circle in higher dimension") {
  GeneratorParams p = par_circle_params();
  p.n = 3;
  const double r = 0.43701602444882104;
  p.c1 = {r * 0.6, r * 0.8, 0.0};
  const AnalyticCurve c0 = generate(p);
  p.a = {1.0, -2.0, 0.5};
  p.z0 = 3.0;
  const AnalyticCurve c = generate(p);
  // a shifts x, z0 shifts z, and the shift in x feeds sum y dx only through y.
  CHECK(c.point(1.5).x[1] - c0.point(1.5).x[1] == doctest::Approx(-2.0));
  CHECK(c.point(1.5).z - c0.point(1.5).z == doctest::Approx(3.0));
  CHECK(identity_defects(c).velocity <= 1e-14);
  CHECK(tau2_at(c, 2.0) <= 1e-13);
}

TEST_CASE("rotation fixtures") {
  CHECK_THROWS_AS(gen_rotation_fixture({0.5, 0.0}, 0.3, {0.0, 0.0}, 0.5), Error);
  CHECK_THROWS_AS(gen_rotation_fixture({1.0}, 0.3, {0.0}, 0.0), Error);
  Rng rng(42);
  for (int k = 0; k < 10; ++k) {
    const AnalyticCurve c = random_rotation_fixture(rng);
    CHECK(identity_defects(c).unit_speed <= 1e-14);
    const double f = c.tf.c0();
    CHECK(std::abs(f) >= 0.1);
    CHECK(std::abs(f) <= 0.9);
  }
}

TEST_CASE("frame reconstruction rejects secular terms") {
  // Constant T_b makes x linear and the sum y dx quadratic only when y grows too.
  CHECK_THROWS_AS(curve_from_frame(1, {TrigPoly(0.6)}, {TrigPoly(0.8)}, TrigPoly(), {0.0}, {0.0}, 0.0), Error);
}

TEST_CASE("kind strings") {
  CHECK(curve_kind_from_string("par-helix") == CurveKind::ParHelix);
  CHECK(std::string(to_string(CurveKind::PerpCircle)) == "perp-circle");
  CHECK_THROWS_AS(curve_kind_from_string("spiral"), Error);
}

TEST_CASE("printed coordinate blocks compared with the reconstruction") {
  for (const auto& p : {perp_params(), par_circle_params(), par_helix_params()}) {
    const AnalyticCurve c = generate(p);
    const auto diffs = compare_printed_block(c);
    MESSAGE(std::string(to_string(p.kind)) << ": " << diffs.size() << " coefficient differences");
    for (const auto& d : diffs)
      MESSAGE("  " << d.coordinate << " " << d.diff.what << " cos " << d.diff.expected_cos << " vs "
                   << d.diff.actual_cos << ", sin " << d.diff.expected_sin << " vs " << d.diff.actual_sin);
  }
  // The printed x/y blocks for the perp circle integrate T exactly.
  for (const auto& d : compare_printed_block(generate(perp_params())))
    CHECK(d.coordinate == "z");
}
