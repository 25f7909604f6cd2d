#include <benchmark/benchmark.h>

#include "ghlab/config_space.hpp"
#include "ghlab/gh_solver.hpp"
#include "ghlab/simplex.hpp"

using namespace ghlab;

static void BM_GhExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto backend = state.range(1) ? GhBackend::IrreducibleBlocks : GhBackend::BranchAndBound;
  Rng rng(17);
  auto x = random_space(n, {}, rng);
  auto y = random_space(n, {}, rng);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto r = gh_exact(x, y, backend);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.distance);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_GhExact)->ArgsProduct({{3, 4, 5, 6, 7}, {0}})->ArgsProduct({{3, 4, 5}, {1}});

static void BM_GhBijective(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(18);
  auto x = random_space(n, {}, rng);
  auto y = random_space(n, {}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gh_bijective(x, y).distance);
}
BENCHMARK(BM_GhBijective)->DenseRange(4, 8, 2);

static void BM_QuotientDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(19);
  auto a = to_rho(random_space(n, {}, rng));
  auto b = to_rho(random_space(n, {}, rng));
  for (auto _ : state) benchmark::DoNotOptimize(quotient_distance(a, b).distance);
}
BENCHMARK(BM_QuotientDistance)->DenseRange(4, 7);

static void BM_SimplexClosedVsEnum(benchmark::State& state) {
  Rng rng(20);
  auto x = random_space(7, {}, rng);
  SimplexSpec spec(3, 0.2);
  const bool closed = state.range(0) == 0;
  for (auto _ : state) {
    if (closed) benchmark::DoNotOptimize(gh_to_simplex_closed(spec, x).distance);
    else benchmark::DoNotOptimize(gh_to_simplex_enum(spec, x));
  }
}
BENCHMARK(BM_SimplexClosedVsEnum)->Arg(0)->Arg(1);

static void BM_GapSearch(benchmark::State& state) {
  GapSearchOptions opts;
  opts.points = static_cast<std::size_t>(state.range(0));
  opts.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bijection_gap_search(opts));
}
BENCHMARK(BM_GapSearch)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
