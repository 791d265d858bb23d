#include <benchmark/benchmark.h>

#include <vector>

#include "nbc/centrality.hpp"
#include "nbc/generators.hpp"
#include "nbc/spectral.hpp"

namespace {

const nbc::Graph& hub_graph(std::size_t n) {
  static std::size_t cached_n = 0;
  static nbc::Graph g;
  if (cached_n != n) {
    g = nbc::largest_component(nbc::generate_er_plus_hub({n, 10.0, 120.0, 1}));
    cached_n = n;
  }
  return g;
}

void BM_GenerateErHub(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nbc::generate_er_plus_hub({n, 10.0, 120.0, 1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateErHub)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GeneratePowerLaw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nbc::generate_powerlaw_config({n, 2.5, 2, 1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeneratePowerLaw)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

template <class Op>
void apply_bench(benchmark::State& state) {
  const nbc::Graph& g = hub_graph(static_cast<std::size_t>(state.range(0)));
  const Op op(g);
  std::vector<double> in(op.dimension(), 1.0), out(op.dimension());
  for (auto _ : state) {
    op.apply(in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.edge_count()));
}

void BM_ApplyAdjacency(benchmark::State& state) { apply_bench<nbc::AdjacencyOperator>(state); }
void BM_ApplyIharaBass(benchmark::State& state) { apply_bench<nbc::IharaBassOperator>(state); }
BENCHMARK(BM_ApplyAdjacency)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ApplyIharaBass)->Arg(100000)->Arg(1000000);

void BM_EigenvectorCentrality(benchmark::State& state) {
  const nbc::Graph& g = hub_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbc::eigenvector_centrality(g));
}
BENCHMARK(BM_EigenvectorCentrality)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_NonbacktrackingCentrality(benchmark::State& state) {
  const nbc::Graph& g = hub_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbc::nonbacktracking_centrality(g));
}
BENCHMARK(BM_NonbacktrackingCentrality)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
