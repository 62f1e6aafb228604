#include <benchmark/benchmark.h>

#include "lober/lober.hpp"

using namespace lober;

namespace {

std::pair<ClosedCurve, ClosedCurve> circles(std::size_t n) {
  return {fixtures::circle({0, 0}, 1, n), fixtures::circle({1, 0}, 1, n)};
}

void BM_FindIntersections(benchmark::State& state) {
  const auto [a, b] = circles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_intersections(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindIntersections)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();

void BM_ClassMethod(benchmark::State& state) {
  const auto [a, b] = circles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lobe_areas(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassMethod)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();

void BM_WindingMethod(benchmark::State& state) {
  const auto [a, b] = circles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(set_difference_areas(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WindingMethod)->RangeMultiplier(8)->Range(1 << 10, 1 << 20)->Complexity();

void BM_WindingQuery(benchmark::State& state) {
  const ClosedCurve c = fixtures::circle({0, 0}, 1, static_cast<std::size_t>(state.range(0)));
  const WindingIndex index(c);
  double x = -1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(index.indicator({x, 0.3}));
    x = x > 1.5 ? -1.5 : x + 1e-3;
  }
}
BENCHMARK(BM_WindingQuery)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_Densify(benchmark::State& state) {
  const auto [a, b] = circles(4096);
  const DensifyConfig cfg{.n_pass = static_cast<int>(state.range(0)), .n_dens = 10};
  for (auto _ : state) benchmark::DoNotOptimize(densify(a, b, cfg));
}
BENCHMARK(BM_Densify)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
