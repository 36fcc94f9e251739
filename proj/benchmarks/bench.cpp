#include <benchmark/benchmark.h>

#include "wk/closed_forms.hpp"
#include "wk/denominators.hpp"
#include "wk/evaluator.hpp"
#include "wk/kappa.hpp"

namespace {

// Cold one-point evaluation; a fresh table each iteration keeps the DVV
// recursion honest instead of timing a memo lookup.
void BM_OnePointIntersection(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wk::TauEvaluator evaluator;
    benchmark::DoNotOptimize(evaluator.intersection(wk::normalize(g, {3 * g - 2})));
  }
}
BENCHMARK(BM_OnePointIntersection)->DenseRange(2, 8);

void BM_TwoPointSweepCold(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wk::TauEvaluator evaluator;
    for (int d = 0; d <= 3 * g - 1; ++d) {
      benchmark::DoNotOptimize(evaluator.intersection(wk::normalize(g, {d, 3 * g - 1 - d})));
    }
  }
}
BENCHMARK(BM_TwoPointSweepCold)->DenseRange(2, 7);

void BM_DijkgraafSeries(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wk::dijkgraaf_two_point_series(degree));
  }
}
BENCHMARK(BM_DijkgraafSeries)->Arg(17)->Arg(26)->Arg(37);

void BM_InteriorDenominatorLcm(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wk::TauEvaluator evaluator;
    benchmark::DoNotOptimize(wk::denominator_lcm_interior(evaluator, g));
  }
}
BENCHMARK(BM_InteriorDenominatorLcm)->DenseRange(2, 4);

void BM_KappaLcm(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    wk::TauEvaluator tau;
    wk::KappaEvaluator evaluator(tau);
    benchmark::DoNotOptimize(wk::kappa_denominator_lcm(evaluator, g));
  }
}
BENCHMARK(BM_KappaLcm)->DenseRange(2, 3);

void BM_SetPartitions(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wk::set_partitions(m));
  }
}
BENCHMARK(BM_SetPartitions)->DenseRange(4, 10);

}  // namespace

BENCHMARK_MAIN();
