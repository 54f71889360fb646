#include <benchmark/benchmark.h>

#include <cmath>

#include "sasaki/bitension.hpp"
#include "sasaki/generators.hpp"
#include "sasaki/rng.hpp"
#include "sasaki/selfcheck.hpp"

using namespace sasaki;

static void BM_Connection(benchmark::State& state) {
  Rng rng(1);
  const Dimension n(static_cast<int>(state.range(0)));
  const FrameVector u = random_frame_vector(rng, n), v = random_frame_vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(connection(u, v));
}
BENCHMARK(BM_Connection)->Arg(1)->Arg(3)->Arg(8);

static void BM_CurvatureSpaceForm(benchmark::State& state) {
  Rng rng(2);
  const Dimension n(static_cast<int>(state.range(0)));
  const FrameVector x = random_frame_vector(rng, n), y = random_frame_vector(rng, n),
                    z = random_frame_vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_space_form(-3.0, x, y, z));
}
BENCHMARK(BM_CurvatureSpaceForm)->Arg(1)->Arg(3)->Arg(8);

static void BM_CurvatureFromConnection(benchmark::State& state) {
  Rng rng(3);
  const Dimension n(static_cast<int>(state.range(0)));
  const FrameVector x = random_frame_vector(rng, n), y = random_frame_vector(rng, n),
                    z = random_frame_vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_from_connection(x, y, z));
}
BENCHMARK(BM_CurvatureFromConnection)->Arg(1)->Arg(3)->Arg(8);

static void BM_AnalyzePoint(benchmark::State& state) {
  GeneratorParams p;
  p.kind = CurveKind::ParHelix;
  p.beta0_cos2 = 0.9;
  p.sign = -1;
  p.c1 = {std::sqrt(0.1), 0.0};
  const AnalyticCurve c = generate(p);
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_point(eval_jet(c, s)));
    s += 1e-3;
  }
}
BENCHMARK(BM_AnalyzePoint);

static void BM_ExpansionVsDirect(benchmark::State& state) {
  Rng rng(4);
  const AnalyticCurve c = random_rotation_fixture(rng);
  for (auto _ : state) benchmark::DoNotOptimize(expansion_direct_gap(c, -3.0));
}
BENCHMARK(BM_ExpansionVsDirect);
