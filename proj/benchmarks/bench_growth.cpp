#include <benchmark/benchmark.h>

#include <bsgrowth/growth.hpp>

using namespace bsgrowth;

static void BM_OrderDividingPrefix(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto counts = growth::order_dividing_counts(2, n);
    benchmark::DoNotOptimize(counts);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_OrderDividingPrefix)->Arg(500)->Arg(2000)->Arg(5000)->Complexity();

static void BM_GelmanSeries(benchmark::State& state) {
  const BSParams params = normalize(2, 3);
  const std::int64_t n_max = state.range(0);
  for (auto _ : state) {
    BigInt checksum = 0;
    for (std::int64_t n = 1; n <= n_max; ++n)
      checksum += growth::gelman_count(params, n);
    benchmark::DoNotOptimize(checksum);
  }
  state.SetComplexityN(n_max);
}
BENCHMARK(BM_GelmanSeries)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_FreeProductSieve(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto series = growth::free_product_subgroup_series(2, n);
    benchmark::DoNotOptimize(series);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FreeProductSieve)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_CensusRatio(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    double ratio = growth::census_ratio(2, n);
    benchmark::DoNotOptimize(ratio);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CensusRatio)->Arg(100)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
