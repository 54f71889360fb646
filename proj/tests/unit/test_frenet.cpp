#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/frenet.hpp"
#include "sasaki/generators.hpp"

using namespace sasaki;
using namespace sasaki::testing;

namespace {

PointGeometry at(const AnalyticCurve& c, double s, const FrenetOptions& o = {}) {
  return analyze_point(eval_jet(c, s), o);
}

}  // namespace

TEST_CASE("Frenet frame is orthonormal") {
  for (const auto& curve : {tilted_fixture(), rotation_03(), generate(par_helix_params())}) {
    for (double s : {0.3, 1.7, 4.2}) {
      const auto g = at(curve, s);
      for (std::size_t i = 0; i < g.frenet.e.size(); ++i)
        for (std::size_t j = 0; j < g.frenet.e.size(); ++j)
          CHECK(std::abs(g_frame(g.frenet.e[i], g.frenet.e[j]) - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("covariant jet matches the connection applied to T") {
  const AnalyticCurve c = tilted_fixture();
  const Jet4 j = eval_jet(c, 0.8);
  const CovariantJet cj = covariant_jet(j);
  CHECK((cj.h - cov_deriv_along(j.t, j.t, j.dt)).max_abs() <= 1e-14);
  // H is orthogonal to T for unit-speed curves.
  CHECK(std::abs(g_frame(cj.h, j.t)) <= 1e-14);
}

TEST_CASE("Frenet equation for E_2 along a curve with varying eta(T)") {
  // nabla_T E_2 = -kappa_1 T + kappa_2 E_3, tested through
  // d/ds g(E_2, V) = g(nabla_T E_2, V) + g(E_2, nabla_T V) for V = phi T.
  const AnalyticCurve c = tilted_fixture();
  for (double s : {0.4, 1.1, 2.5}) {
    const auto g = at(c, s);
    REQUIRE(g.frenet.order >= 3);
    const double k2 = g.frenet.kappa[1];
    auto alpha = [&](double u) { return at(c, u).scalars.alpha; };
    const double dalpha = fd8(alpha, s, 1e-3, 1);
    // nabla_T (phi T) = xi - f T + kappa_1 phi E_2.
    CHECK(dalpha == doctest::Approx(k2 * g.scalars.g3 + g.scalars.eta2).epsilon(1e-7));
  }
}

TEST_CASE("two routes to f' agree") {
  const AnalyticCurve c = tilted_fixture();
  for (double s : {0.2, 1.9, 3.3}) {
    const auto g = at(c, s);
    CHECK(std::abs(g.scalars.fprime - g.scalars.fprime_from_frame) <= 1e-12);
    CHECK_FALSE(g.scalars.fprime_warning);
    auto f = [&](double u) { return eval_jet(c, u).t.f; };
    CHECK(g.scalars.fprime == doctest::Approx(fd8(f, s, 1e-3, 1)).epsilon(1e-9));
  }
}

TEST_CASE("kappa_1' from the jet matches a finite difference") {
  const AnalyticCurve c = tilted_fixture();
  auto k1 = [&](double u) { return at(c, u).frenet.kappa[0]; };
  for (double s : {0.5, 2.0}) {
    const auto g = at(c, s);
    CHECK(g.frenet.kappa1_prime == doctest::Approx(fd8(k1, s, 1e-3, 1)).epsilon(1e-8));
  }
}

TEST_CASE("metric compatibility along the curve") {
  // d/ds g(H, H) = 2 g(nabla_T H, H).
  const AnalyticCurve c = tilted_fixture();
  auto hh = [&](double u) {
    const auto cj = covariant_jet(eval_jet(c, u));
    return g_frame(cj.h, cj.h);
  };
  for (double s : {0.7, 2.2}) {
    const auto cj = covariant_jet(eval_jet(c, s));
    CHECK(fd8(hh, s, 1e-3, 1) == doctest::Approx(2.0 * g_frame(cj.d2, cj.h)).epsilon(1e-9));
  }
}

TEST_CASE("constant-curvature fixtures: kappa_2 g3 balances eta(E_2)") {
  for (const auto& curve : {rotation_03(), generate(par_helix_params()), generate(par_circle_params())}) {
    const auto g = at(curve, 1.3);
    CHECK(std::abs(g.scalars.eta2) <= 1e-12);
    CHECK(std::abs(g.frenet.kappa_or_zero(2) * g.scalars.g3) <= 1e-12);
  }
}

TEST_CASE("rotation fixture curvature matches the oracle") {
  const auto g = at(rotation_03(), 2.0);
  CHECK(g.frenet.kappa[0] == doctest::Approx(oracle::kRotationKappa1).epsilon(1e-12));
}

TEST_CASE("orders: geodesic, circle, helix") {
  // Integral curve of xi is a geodesic.
  const AnalyticCurve line = curve_from_frame(1, {TrigPoly()}, {TrigPoly()}, TrigPoly(1.0), {0.0}, {0.0}, 0.0);
  CHECK(at(line, 0.5).frenet.order == 1);
  CHECK(at(generate(par_circle_params()), 0.5).frenet.order == 2);
  CHECK(at(generate(par_helix_params()), 0.5).frenet.order == 3);
}

TEST_CASE("not unit speed is rejected") {
  Jet4 j;
  j.t = FrameVector({2.0}, {0.0}, 0.0);
  j.dt = j.d2t = j.d3t = FrameVector(Dimension(1));
  CHECK_THROWS_AS(analyze_point(j), Error);
}
