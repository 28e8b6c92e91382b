#include <benchmark/benchmark.h>

#include "hofstadter/chern.hpp"
#include "hofstadter/gap_table.hpp"
#include "hofstadter/rationals.hpp"
#include "hofstadter/render.hpp"
#include "hofstadter/spectrum.hpp"
#include "hofstadter/verify.hpp"

namespace {

using namespace hofstadter;

void BM_BandEdges(benchmark::State& state) {
  const ReducedFraction f(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(band_edges(f));
}
BENCHMARK(BM_BandEdges)->RangeMultiplier(2)->Range(4, 256);

void BM_GapLabels(benchmark::State& state) {
  const ReducedFraction f(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap_labels(f, Regime::TightBinding));
}
BENCHMARK(BM_GapLabels)->RangeMultiplier(8)->Range(8, 4096);

void BM_FareySequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(farey_sequence(state.range(0)));
}
BENCHMARK(BM_FareySequence)->Arg(50)->Arg(200);

void BM_VerifyLabels(benchmark::State& state) {
  const ReducedFraction f(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_labels(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyLabels)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RenderButterfly(benchmark::State& state) {
  RenderConfig cfg;
  cfg.q_max = state.range(0);
  cfg.width = 256;
  cfg.height = 256;
  for (auto _ : state) benchmark::DoNotOptimize(render_butterfly(cfg));
}
BENCHMARK(BM_RenderButterfly)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_GapTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_gap_table(state.range(0)));
}
BENCHMARK(BM_GapTable)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
