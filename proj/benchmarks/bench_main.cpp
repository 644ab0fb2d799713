#include <benchmark/benchmark.h>

#include "achset/boundary.hpp"
#include "achset/mm.hpp"
#include "achset/subsums.hpp"

namespace {

using namespace achset;

const MMParams& one_three_five() {
  static const MMParams p = MMParams::eventually_constant({1, 3, 5}, 5);
  return p;
}

void BM_SubsumsGn(benchmark::State& state) {
  const Series s = gn_series();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(initial_subsums(s, n));
  state.counters["card"] = static_cast<double>(initial_subsums(s, n).values.size());
}
BENCHMARK(BM_SubsumsGn)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

// Rationally independent-looking terms: little deduplication in the merge.
void BM_SubsumsGeometric(benchmark::State& state) {
  const Series s = geometric_series(Rational(1), Rational(BigInt(1), BigInt(3)));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(initial_subsums(s, n));
}
BENCHMARK(BM_SubsumsGeometric)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_SubsumsMm(benchmark::State& state) {
  const Series s = mm_series(one_three_five());
  const std::size_t n = one_three_five().N(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(initial_subsums(s, n));
}
BENCHMARK(BM_SubsumsMm)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TranslateUnion(benchmark::State& state) {
  const Series s = mm_series(one_three_five());
  const std::size_t n = one_three_five().N(3);
  const auto f = initial_subsums(s, n);
  const Rational r = s.remainder(n).lo();
  for (auto _ : state) benchmark::DoNotOptimize(translate_union(f.values, r));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.values.size()));
}
BENCHMARK(BM_TranslateUnion)->Unit(benchmark::kMillisecond);

void BM_Ladder(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ladder(one_three_five(), k));
}
BENCHMARK(BM_Ladder)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CensusCrossCheck(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_cross_check(one_three_five(), k));
}
BENCHMARK(BM_CensusCrossCheck)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ResidualTrace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(boundary_residual_trace(one_three_five(), 20));
}
BENCHMARK(BM_ResidualTrace)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
