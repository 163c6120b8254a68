#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "hlindex/inertia.hpp"
#include "hlindex/poly.hpp"

namespace {

void BM_InertiaElimination(benchmark::State& state) {
  const auto g = hl::bench::random_graph(static_cast<std::size_t>(state.range(0)));
  const hl::Rational one(1);
  for (auto _ : state) benchmark::DoNotOptimize(hl::inertia(g, one));
}
BENCHMARK(BM_InertiaElimination)->RangeMultiplier(2)->Range(16, 512);

void BM_InertiaSturm(benchmark::State& state) {
  const auto g = hl::bench::random_graph(static_cast<std::size_t>(state.range(0)));
  const hl::Rational one(1);
  for (auto _ : state) benchmark::DoNotOptimize(hl::inertia_sturm(g, one));
}
BENCHMARK(BM_InertiaSturm)->RangeMultiplier(2)->Range(8, 32);

void BM_CharPoly(benchmark::State& state) {
  const auto g = hl::bench::random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hl::char_poly(g));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
