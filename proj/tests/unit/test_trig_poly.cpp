#include <doctest.h>

#include <cmath>

#include "sasaki/errors.hpp"
#include "sasaki/rng.hpp"
#include "sasaki/trig_poly.hpp"

using namespace sasaki;

namespace {

TrigPoly random_poly(Rng& rng, int terms) {
  TrigPoly p(rng.uniform(-1.0, 1.0));
  for (int k = 0; k < terms; ++k) p.add_term(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return p;
}

}  // namespace

TEST_CASE("canonical form merges and folds") {
  TrigPoly p;
  p.add_term(-2.0, 1.0, 1.0);  // cos(2s) - sin(2s)
  p.add_term(2.0, 0.5, 0.0);
  p.add_term(0.0, 3.0, 7.0);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].freq == 2.0);
  CHECK(p.terms()[0].cos_amp == doctest::Approx(1.5));
  CHECK(p.terms()[0].sin_amp == doctest::Approx(-1.0));
  CHECK(p.c0() == doctest::Approx(3.0));
}

TEST_CASE("evaluation and derivatives agree with finite differences") {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const TrigPoly p = random_poly(rng, 3) + TrigPoly::linear(0.0, 0.4);
    const double s = rng.uniform(-5.0, 5.0), h = 1e-4;
    const double fd = (p(s + h) - p(s - h)) / (2 * h);
    CHECK(p.derivative_at(1, s) == doctest::Approx(fd).epsilon(1e-7));
    CHECK(p.derivative()(s) == doctest::Approx(p.derivative_at(1, s)).epsilon(1e-14));
    CHECK(p.derivative().derivative().derivative()(s) ==
          doctest::Approx(p.derivative_at(3, s)).epsilon(1e-12));
  }
}

TEST_CASE("antiderivative inverts the derivative") {
  Rng rng(2);
  const TrigPoly p = random_poly(rng, 4);
  const TrigPoly q = p.antiderivative();
  CHECK(max_coefficient_diff(q.derivative(), p) <= 1e-14);
  CHECK(q.lin() == doctest::Approx(p.c0()));
  CHECK_THROWS_AS(TrigPoly::linear(0.0, 1.0).antiderivative(), Error);
}

TEST_CASE("product matches pointwise multiplication") {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const TrigPoly p = random_poly(rng, 3), q = random_poly(rng, 2);
    const TrigPoly pq = p * q;
    for (double s : {-2.0, 0.1, 3.7}) CHECK(pq(s) == doctest::Approx(p(s) * q(s)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(TrigPoly::linear(0.0, 1.0) * TrigPoly::cosine(1.0), Error);
  const TrigPoly lin = TrigPoly::linear(1.0, 2.0) * TrigPoly(3.0);
  CHECK(lin.lin() == doctest::Approx(6.0));
}

TEST_CASE("coefficient diffs name the offending frequency") {
  const TrigPoly a = TrigPoly::cosine(1.0) + TrigPoly::sine(2.0, 0.5) + TrigPoly(4.0);
  const TrigPoly b = TrigPoly::cosine(1.0) + TrigPoly::sine(2.0, 0.25) + TrigPoly(1.0);
  const auto d = coefficient_diffs(a, b, 1e-12, true);
  REQUIRE(d.size() == 1);
  CHECK(d[0].expected_sin == 0.5);
  CHECK(d[0].actual_sin == 0.25);
  CHECK(coefficient_diffs(a, b, 1e-12, false).size() == 2);
}

TEST_CASE("frequency queries") {
  const TrigPoly p = TrigPoly::cosine(0.7) + TrigPoly::sine(2.5);
  CHECK(p.lowest_frequency() == 0.7);
  CHECK(p.highest_frequency() == 2.5);
  CHECK(TrigPoly(1.0).lowest_frequency() == 0.0);
  CHECK(TrigPoly().is_zero());
}
