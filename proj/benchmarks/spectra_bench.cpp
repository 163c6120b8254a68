#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "hlindex/canonical.hpp"
#include "hlindex/spectra.hpp"

namespace {

void BM_Eigenvalues(benchmark::State& state) {
  const auto g = hl::bench::random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hl::eigenvalues_only(g));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(16, 512);

void BM_MedianReport(benchmark::State& state) {
  const auto g = hl::bench::random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hl::median_report(g));
}
BENCHMARK(BM_MedianReport)->RangeMultiplier(2)->Range(16, 256);

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = hl::bench::random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hl::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(2)->Range(8, 64);

void BM_EnumerateByOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hl::enumerate_by_order(n));
}
BENCHMARK(BM_EnumerateByOrder)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace
