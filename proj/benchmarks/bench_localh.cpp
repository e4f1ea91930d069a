#include <benchmark/benchmark.h>

#include "localh/local_h.hpp"
#include "localh/noncrossing.hpp"
#include "localh/permutation.hpp"

using namespace localh;

static void BM_ClusterA(benchmark::State& state) {
  const auto t = CartanType::A(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_h_cluster(t, {22, 1}));
}
BENCHMARK(BM_ClusterA)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ClusterD(benchmark::State& state) {
  const auto t = CartanType::D(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_h_cluster(t, {22, 1}));
}
BENCHMARK(BM_ClusterD)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_CountNcA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_nc_a(n));
}
BENCHMARK(BM_CountNcA)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_CountNcB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_nc_b(n));
}
BENCHMARK(BM_CountNcB)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_BaryCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bary_xi_counts(n));
}
BENCHMARK(BM_BaryCounts)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

static void BM_Derangements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(local_h_barycentric(n));
}
BENCHMARK(BM_Derangements)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

static void BM_FssOrbits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t total = 0;
    for_each_permutation(n, [&](const Perm& w) {
      if (is_in_E(w) && stats(w).double_descents.empty()) total += fss_orbit(w).size();
    });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FssOrbits)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
