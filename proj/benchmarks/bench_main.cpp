#include <benchmark/benchmark.h>

#include "zalcman/families.hpp"
#include "zalcman/loewner.hpp"
#include "zalcman/power_series.hpp"
#include "zalcman/quad_diff.hpp"
#include "zalcman/schiffer.hpp"
#include "zalcman/search.hpp"

using namespace zalcman;

static void BM_Power(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = koebe_rotation(0.7, N).series();
  for (auto _ : state) benchmark::DoNotOptimize(power(f, N / 2));
}
BENCHMARK(BM_Power)->Arg(4)->Arg(12)->Arg(32);

static void BM_Evolve(benchmark::State& state) {
  const auto driving = random_driving(4, 4.0, 11);
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve(driving, 6, EvolveOptions{dt, 1e300}));
}
BENCHMARK(BM_Evolve)->Arg(100)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Objective(benchmark::State& state) {
  const auto driving = random_driving(4, 4.0, 3);
  const ZalcmanSpec spec{3.0, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(objective(driving, spec, 4, 2e-3));
}
BENCHMARK(BM_Objective)->Unit(benchmark::kMillisecond);

static void BM_DoubleRootFit(benchmark::State& state) {
  const auto g = rhs_polynomial(3.0, koebe_rotation(0.0, 4));
  for (auto _ : state) benchmark::DoNotOptimize(double_root_fit(g));
}
BENCHMARK(BM_DoubleRootFit);

static void BM_TraceFromPole(benchmark::State& state) {
  const QuadDiffT1 qd({1.0, 0.5});
  TraceOptions opts;
  opts.ds = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(trace_from_pole(qd, opts));
}
BENCHMARK(BM_TraceFromPole)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
