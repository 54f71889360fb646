#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sasaki/csv_io.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/ode.hpp"

using namespace sasaki;
using namespace sasaki::testing;

namespace {

double max_deviation(const GeneratorParams& p, double h, const Span& span, double* drift) {
  const SampledCurve ode = gen_by_ode(p, h, span, drift);
  const AnalyticCurve exact = generate(p);
  double m = 0.0;
  for (std::size_t k = 0; k < ode.size(); ++k) {
    const CoordPoint q = exact.point(ode.s[k]);
    const CoordPoint& o = ode.points[k];
    for (std::size_t i = 0; i < q.dim(); ++i) m = std::max({m, std::abs(q.x[i] - o.x[i]), std::abs(q.y[i] - o.y[i])});
    m = std::max(m, std::abs(q.z - o.z));
  }
  return m;
}

}  // namespace

TEST_CASE("RK4 matches the closed forms for every kind") {
  for (const auto& p : {perp_params(), par_circle_params(), par_helix_params()}) {
    double drift = 1.0;
    const double dev = max_deviation(p, 1e-3, {0.0, 10.0}, &drift);
    MESSAGE(std::string(to_string(p.kind)) << ": deviation " << dev << ", drift " << drift);
    CHECK(dev <= 1e-6);
    CHECK(drift <= 1e-12);
  }
}

TEST_CASE("RK4 error shrinks with the step") {
  const GeneratorParams p = par_helix_params();
  const double coarse = max_deviation(p, 0.1, {0.0, 10.0}, nullptr);
  const double fine = max_deviation(p, 0.05, {0.0, 10.0}, nullptr);
  CHECK(coarse / fine >= 12.0);
}

TEST_CASE("grid and span handling") {
  const SampledCurve c = gen_by_ode(par_circle_params(), 0.1, {1.0, 4.0});
  CHECK(c.s.front() == 1.0);
  CHECK(c.s.back() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(c.size() == 31);
  validate_uniform(c);
}

TEST_CASE("oversized step is reported") {
  try {
    gen_by_ode(par_helix_params(), 2.0, {0.0, 10.0});
    FAIL("expected StepTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepTooLarge);
  }
}
