#include <benchmark/benchmark.h>

#include "resil/gadgets.hpp"
#include "resil/reductions.hpp"
#include "resil/resilience.hpp"

using namespace resil;

static void BM_ColorChvatal(benchmark::State& state) {
  const Graph g = classic::chvatal();
  for (auto _ : state) benchmark::DoNotOptimize(is_k_colorable(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ColorChvatal)->Arg(3)->Arg(4);

static void BM_ColorGadgetGraph(benchmark::State& state) {
  const GadgetGraph gg = three_sat_to_coloring(CnfFormula(3, {{1, 2, 3}, {-1, -2, 3}, {1, -3}}));
  for (auto _ : state) benchmark::DoNotOptimize(is_k_colorable(gg.graph, 3));
  state.counters["vertices"] = static_cast<double>(gg.graph.num_vertices());
}
BENCHMARK(BM_ColorGadgetGraph)->Unit(benchmark::kMillisecond);

// Full 4-subset scan of the Duerer graph at k = 4 (resilient, so every subset is visited).
static void BM_ScanDurer(benchmark::State& state) {
  const Graph g = classic::durer();
  const ScanOptions opts{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(is_r_resiliently_k_colorable(g, 4, 4, opts));
}
BENCHMARK(BM_ScanDurer)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_MaxResilienceClassics(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_graph_resilience(classic::petersen(), 3));
    benchmark::DoNotOptimize(max_graph_resilience(classic::durer(), 4));
    benchmark::DoNotOptimize(max_graph_resilience(classic::grotzsch(), 4));
    benchmark::DoNotOptimize(max_graph_resilience(classic::chvatal(), 4));
  }
}
BENCHMARK(BM_MaxResilienceClassics)->Unit(benchmark::kMillisecond);

static void BM_SatResilienceBlowUp(benchmark::State& state) {
  const CnfFormula f = blow_up(CnfFormula(4, {{1, 2, 3}, {-1, -2, 4}, {2, -3, -4}}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_r_resilient(f, static_cast<std::int32_t>(state.range(0))));
}
BENCHMARK(BM_SatResilienceBlowUp)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_HardnessChain(benchmark::State& state) {
  const CnfFormula f3(3, {{1, 2, 3}, {-1, -2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(hardness_chain(static_cast<std::int32_t>(state.range(0)), f3));
}
BENCHMARK(BM_HardnessChain)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_VerifyGadgets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_gadget_contracts());
}
BENCHMARK(BM_VerifyGadgets)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
