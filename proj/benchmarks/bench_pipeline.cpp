#include <benchmark/benchmark.h>

#include <cmath>

#include "sasaki/classifier.hpp"
#include "sasaki/csv_io.hpp"
#include "sasaki/ode.hpp"
#include "sasaki/verify.hpp"

using namespace sasaki;

namespace {

GeneratorParams helix() {
  GeneratorParams p;
  p.kind = CurveKind::ParHelix;
  p.beta0_cos2 = 0.9;
  p.sign = -1;
  p.c1 = {std::sqrt(0.1), 0.0};
  return p;
}

}  // namespace

static void BM_VerifyAnalytic(benchmark::State& state) {
  const AnalyticCurve c = generate(helix());
  for (auto _ : state) benchmark::DoNotOptimize(verify_analytic(c));
}
BENCHMARK(BM_VerifyAnalytic)->Unit(benchmark::kMillisecond);

static void BM_VerifySampled(benchmark::State& state) {
  const SampledCurve c = sample_curve(generate(helix()), 0.0, 20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_sampled(c));
}
BENCHMARK(BM_VerifySampled)->Arg(2001)->Arg(20001)->Unit(benchmark::kMillisecond);

static void BM_OdeRK4(benchmark::State& state) {
  const GeneratorParams p = helix();
  for (auto _ : state) benchmark::DoNotOptimize(gen_by_ode(p, 1e-3, {0.0, 10.0}));
}
BENCHMARK(BM_OdeRK4)->Unit(benchmark::kMillisecond);

static void BM_AdmissiblePar(benchmark::State& state) {
  AngleParams a;
  a.beta0 = 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(admissible_par(-3.0, a));
}
BENCHMARK(BM_AdmissiblePar);

static void BM_BruteForce(benchmark::State& state) {
  GridSpec g;
  g.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_admissible(-3.0, Mode::Par, 0.3, std::nullopt, g));
}
BENCHMARK(BM_BruteForce)->Arg(1001)->Arg(4001)->Unit(benchmark::kMicrosecond);
