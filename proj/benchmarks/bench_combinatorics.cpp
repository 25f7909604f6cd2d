#include <benchmark/benchmark.h>

#include "ghlab/edge_perms.hpp"
#include "ghlab/partition.hpp"

using namespace ghlab;

static void BM_PartitionEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = 0;
    PartitionEnumerator it(n, k);
    while (it.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["partitions"] = static_cast<double>(count);
}
BENCHMARK(BM_PartitionEnumeration)->Args({8, 3})->Args({10, 4})->Args({12, 5});

static void BM_SearchNonInduced(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto s = search_non_induced(n);
    nodes = s.nodes;
    benchmark::DoNotOptimize(s.adjacency_preserving);
  }
  // visited-node count is the regression metric for the search
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchNonInduced)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_NormalizerProbe(benchmark::State& state) {
  const auto alpha = remark82_alpha();
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_probe(alpha).normalizes);
}
BENCHMARK(BM_NormalizerProbe);
