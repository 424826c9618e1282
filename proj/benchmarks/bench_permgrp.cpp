#include <benchmark/benchmark.h>

#include <random>

#include <bsgrowth/montecarlo.hpp>
#include <bsgrowth/permgrp.hpp>

using namespace bsgrowth;
namespace pg = bsgrowth::permgrp;

static void BM_OracleCounts(benchmark::State& state) {
  const BSParams params = normalize(2, 3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto counts = pg::oracle_counts(params, n);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_OracleCounts)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_OracleFreeProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto counts = pg::oracle_free_product(2, n);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_OracleFreeProduct)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GroupOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const Permutation a = pg::sample_uniform_permutation(n, rng);
  const Permutation b = pg::sample_uniform_permutation(n, rng);
  for (auto _ : state) {
    BigInt order = pg::group_order({a, b}, n);
    benchmark::DoNotOptimize(order);
  }
}
BENCHMARK(BM_GroupOrder)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_MonteCarloTrials(benchmark::State& state) {
  const int trials = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto result = pg::monte_carlo_generation(2, 12, trials, seed++);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_MonteCarloTrials)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
