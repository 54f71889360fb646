#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "sasaki/commands.hpp"
#include "sasaki/csv_io.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/params_json.hpp"
#include "sasaki/selfcheck.hpp"
#include "sasaki/verify.hpp"

using namespace sasaki;
using namespace sasaki::testing;
namespace fs = std::filesystem;

namespace {

FrameVector broken_connection(const FrameVector& t, const FrameVector& v) {
  FrameVector out = connection(t, v);
  out.f *= 2.0;
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sasaki_harness_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const Check* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("selfcheck passes and is deterministic") {
  std::ostringstream a, b;
  CHECK(cmd_selfcheck(42, a) == kExitOk);
  CHECK(cmd_selfcheck(42, b) == kExitOk);
  CHECK(a.str() == b.str());
  const SelfcheckReport r = run_selfcheck();
  CHECK(r.pass);
  CHECK(r.first_failure.empty());
  CHECK(r.items.size() == 8);
}

TEST_CASE("corrupted connection table is caught by metric compatibility") {
  std::ostringstream out;
  CHECK(cmd_selfcheck(42, out, &broken_connection) == kExitFail);
  CHECK(out.str().find("metric_compatibility") != std::string::npos);
  SelfcheckOptions o;
  o.gamma = &broken_connection;
  CHECK(run_selfcheck(o).first_failure == "metric_compatibility");
}

TEST_CASE("CSV round trip preserves every digit") {
  const SampledCurve c = sample_curve(generate(par_helix_params()), 0.0, 5.0, 101);
  std::stringstream ss;
  write_csv(ss, c);
  const SampledCurve back = read_csv(ss);
  REQUIRE(back.size() == c.size());
  CHECK(back.n == 2);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(back.s[k] == c.s[k]);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(back.points[k].x[i] == c.points[k].x[i]);
      CHECK(back.points[k].y[i] == c.points[k].y[i]);
    }
    CHECK(back.points[k].z == c.points[k].z);
  }
}

TEST_CASE("malformed CSV") {
  for (const char* text : {"s,x1,y1\n0,0,0\n", "s,x1,y1,z\n0,0,0\n", "s,x1,y1,z\n0,a,0,0\n", "t,x1,y1,z\n0,0,0,0\n"}) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_csv(is), Error);
  }
}

TEST_CASE("params JSON") {
  const auto p = params_from_json(nlohmann::json::parse(
      R"({"kind":"par-helix","n":2,"beta0_cos2":0.9,"sign":"-","c1":[0.31622776601683794,0]})"));
  CHECK(p.kind == CurveKind::ParHelix);
  CHECK(*p.sign == -1);
  const auto round = params_from_json(params_to_json(p));
  CHECK(*round.beta0_cos2 == 0.9);
  CHECK(round.c1 == p.c1);
  CHECK(params_from_json(nlohmann::json::parse(R"({"kind":"par-circle","n":1,"sign":1})")).sign == 1);
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"kind":"par-circle","colour":1})")), Error);
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"kind":"par-circle","n":"two"})")), Error);
  CHECK(parse_sign("+1") == 1);
  CHECK_THROWS_AS(parse_sign("x"), Error);
}

TEST_CASE("analytic verification of the explicit solutions") {
  const auto helix = verify_analytic(generate(par_helix_params()));
  CHECK(helix.pass);
  CHECK(helix.tau2_max <= 1e-8);
  CHECK(helix.mode == "par");
  REQUIRE(helix.lambda.has_value());
  CHECK(*helix.lambda == doctest::Approx(0.6));
  CHECK(helix.eigen_residual <= 1e-8);
  CHECK(helix.threshold == kAnalyticThreshold);
  CHECK(helix.points == 100);

  const auto circle = verify_analytic(generate(par_circle_params()));
  CHECK(circle.pass);
  CHECK(circle.kappa[0].mean == doctest::Approx(std::sqrt(std::sqrt(5.0) - 2.0)).epsilon(1e-9));

  const auto perp = verify_analytic(generate(perp_params()));
  CHECK_FALSE(perp.pass);
  CHECK(perp.tau2_max == doctest::Approx(oracle::kPerpTau2).epsilon(1e-6));
}

TEST_CASE("rotation fixture fails with tau2 reported") {
  const auto r = verify_analytic(rotation_03());
  CHECK_FALSE(r.pass);
  CHECK(r.tau2_max >= kRotationFloor);
  const Check* c = find_check(r, "tau2");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(to_json(r)["checks"].is_array());
}

TEST_CASE("tangential component and E_1 coefficient are reported") {
  VerifyOptions o;
  o.mode = ModeHint::None;
  const auto r = verify_analytic(tilted_fixture(), o);
  CHECK(r.tangential_max > 0.0);
  CHECK_FALSE(r.pass);
}

TEST_CASE("sampled verification at h = 1e-3") {
  const SampledCurve c = sample_curve(generate(par_helix_params()), 0.0, 20.0, 20001);
  const auto r = verify_sampled(c);
  CHECK(r.pass);
  CHECK(r.tau2_max <= kSampledThreshold);
  CHECK(r.source == "sampled");
  const auto bad = verify_sampled(sample_curve(rotation_03(), 0.0, 20.0, 20001));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("generate command writes rows and a jets sidecar") {
  const fs::path params = scratch("par_circle.json");
  write_text(params, R"({"kind":"par-circle","n":2,"c1":[0.43701602444882104,0]})");
  GenerateArgs g;
  g.params_file = params.string();
  g.out = scratch("par_circle.csv").string();
  g.jets = true;
  std::ostringstream out, err;
  REQUIRE(cmd_generate(g, out, err) == kExitOk);
  const SampledCurve c = read_csv_file(g.out);
  CHECK(c.size() == 256);
  const double rate = std::abs(resolve_constants(params_from_json(nlohmann::json::parse(std::ifstream(params)))).rate);
  CHECK(c.s.back() == doctest::Approx(4.0 * M_PI / rate).epsilon(1e-12));
  CHECK(fs::exists(g.out + ".jets.json"));

  VerifyArgs v;
  v.input = params.string();
  v.report_out = scratch("report.json").string();
  CHECK(cmd_verify(v, out, err) == kExitOk);
  std::ifstream rep(v.report_out);
  const auto j = nlohmann::json::parse(rep);
  CHECK(j.contains("thresholds"));
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("generate command reports the violated constraint") {
  const fs::path params = scratch("perp_bad.json");
  write_text(params, R"({"kind":"perp-circle","n":2,"beta0":1.0471975511965976,"c1":[0.8,0]})");
  GenerateArgs g;
  g.params_file = params.string();
  g.out = scratch("perp_bad.csv").string();
  std::ostringstream out, err;
  CHECK(cmd_generate(g, out, err) == kExitInput);
  CHECK(err.str().find("norm constraint") != std::string::npos);
  CHECK(err.str().find("-1.100e-01") != std::string::npos);
}

TEST_CASE("classify command exit codes") {
  std::ostringstream out, err;
  ClassifyArgs a;
  a.c = -3.0;
  a.beta0_cos2 = 0.9;
  a.sign = -1;
  CHECK(cmd_classify(a, out, err) == kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["solutions"].size() == 2);
  a.sign.reset();
  a.beta0_cos2 = 0.5;
  CHECK(cmd_classify(a, out, err) == kExitFail);
  ClassifyArgs c1;
  c1.c = 1.0;
  c1.kappa1 = 1.0;
  CHECK(cmd_classify(c1, out, err) == kExitOk);
  ClassifyArgs bad;
  bad.beta0 = M_PI / 2.0;
  CHECK(cmd_classify(bad, out, err) == kExitInput);
}

TEST_CASE("verify command on malformed input") {
  const fs::path p = scratch("bad.csv");
  write_text(p, "s,x1,y1,z\n0,0,0,0\n1,nope,0,0\n");
  VerifyArgs v;
  v.input = p.string();
  std::ostringstream out, err;
  CHECK(cmd_verify(v, out, err) == kExitInput);
}
