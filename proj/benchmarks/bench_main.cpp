#include "xxff/luttinger/resummation.hpp"
#include "xxff/toeplitz/asymptotic_series.hpp"
#include "xxff/toeplitz/cauchy_product.hpp"
#include "xxff/xxchain/ed_oracle.hpp"
#include "xxff/xxchain/formfactor.hpp"

#include <benchmark/benchmark.h>

using namespace xxff;

static void BM_CauchyR(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz::cauchy_R(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CauchyR)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oN);

static void BM_ExactGTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz::exact_G_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExactGTable)->Arg(512)->Arg(8192);

static void BM_ExactExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz::exact_expansion(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExactExpansion)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_ShiftedFormfactor(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const xxchain::ChainSpec spec{L, L / 2};
  for (auto _ : state) benchmark::DoNotOptimize(xxchain::shifted_ground_parts(spec, 2));
  state.SetComplexityN(L);
}
BENCHMARK(BM_ShiftedFormfactor)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oNSquared);

static void BM_EdSector(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xxchain::EdSector(L, L / 2));
}
BENCHMARK(BM_EdSector)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_LevelAggregates(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(luttinger::level_aggregates(-0.5, static_cast<int>(state.range(0)), luttinger::Branch::Right));
  }
}
BENCHMARK(BM_LevelAggregates)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
