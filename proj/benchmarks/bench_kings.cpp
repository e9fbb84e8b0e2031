#include <benchmark/benchmark.h>

#include "kings/constructions.hpp"
#include "kings/continuity.hpp"
#include "kings/experiments.hpp"
#include "kings/kings.hpp"
#include "kings/sampled_space.hpp"

namespace {

using namespace kings;

void BM_KingReport(benchmark::State& state) {
  const auto sel = random_tournament(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(king_report(sel));
}
BENCHMARK(BM_KingReport)->RangeMultiplier(4)->Range(16, 1024);

void BM_KingSet(benchmark::State& state) {
  const auto sel = random_tournament(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(king_set(sel));
}
BENCHMARK(BM_KingSet)->RangeMultiplier(4)->Range(16, 1024);

void BM_KSetDirect(benchmark::State& state) {
  const auto sel = random_tournament(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(k_set(sel, 0));
}
BENCHMARK(BM_KSetDirect)->RangeMultiplier(4)->Range(16, 1024);

void BM_KSetComposition(benchmark::State& state) {
  const auto sel = random_tournament(static_cast<std::size_t>(state.range(0)), 3);
  const DominanceRelation rel(sel);
  for (auto _ : state) benchmark::DoNotOptimize(k_set_via_composition(rel, 0));
}
BENCHMARK(BM_KSetComposition)->RangeMultiplier(4)->Range(16, 1024);

void BM_Falsifier(benchmark::State& state) {
  const auto grid = uniform_grid(static_cast<std::size_t>(state.range(0)), true);
  const auto space = sample_graph(sine_curve_f, grid);
  const auto sel = graph_selection(grid, OrderMode::min).selection;
  const double delta = 0.5 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(continuity_falsify(space, sel, delta, 4 * delta));
}
BENCHMARK(BM_Falsifier)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveVerify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_verify(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExhaustiveVerify)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
