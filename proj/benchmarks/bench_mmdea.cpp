#include <benchmark/benchmark.h>

#include "mmds/demand_model.hpp"
#include "mmds/emmdea.hpp"
#include "mmds/generator.hpp"
#include "mmds/hmmdea.hpp"
#include "mmds/mmdea.hpp"

using namespace mmds;

namespace {

struct Workload {
  NetworkGraph graph;
  ShortestPathTree tree;
  DemandMap demand;
};

// 754-node geometric network, `clients` uniform clients over `views` views.
Workload make_workload(std::size_t clients, int views) {
  auto g = generate_topology({.nodes = 754, .edges = 895, .seed = 2011, .model = TopologyModel::kGeometric});
  auto terms = place_clients(g, clients, 7);
  DemandDistribution dist;
  dist.views = views;
  auto demand = sample_demand(dist, terms, 8);
  auto tree = build_spt(g, terms);
  return {std::move(g), std::move(tree), std::move(demand)};
}

const Workload& shared() {
  static const Workload w = make_workload(400, 48);
  return w;
}

void BM_SolveGeneral(benchmark::State& state) {
  const auto& w = shared();
  const QualityConstraint d(static_cast<int>(state.range(0)));
  const auto mode = state.range(1) ? PhiMode::kExact : PhiMode::kLiteral;
  for (auto _ : state) benchmark::DoNotOptimize(solve_general(w.tree, w.demand, d, {.phi = mode}).total);
  state.SetLabel(to_string(mode));
}
BENCHMARK(BM_SolveGeneral)->ArgsProduct({{2, 3, 4, 5, 6, 7, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Specialized(benchmark::State& state) {
  const auto& w = shared();
  const int dv = static_cast<int>(state.range(0));
  SubscriberIndex idx(w.tree, w.demand);
  const auto segments = segment_views(w.demand, QualityConstraint(dv));
  for (auto _ : state)
    for (const auto& seg : segments)
      benchmark::DoNotOptimize(dv == 2 ? solve_d2(seg, idx).cost : solve_d3(seg, idx).cost);
}
BENCHMARK(BM_Specialized)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Heuristic(benchmark::State& state) {
  const auto& w = shared();
  const QualityConstraint d(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_solve(w.tree, w.demand, d).result.total);
}
BENCHMARK(BM_Heuristic)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_Extended(benchmark::State& state) {
  static const Workload w = make_workload(60, 12);
  const QualityConstraint d(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_extended(w.tree, w.demand, d).total);
}
BENCHMARK(BM_Extended)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClientScaling(benchmark::State& state) {
  const auto w = make_workload(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(solve_general(w.tree, w.demand, QualityConstraint(5)).total);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClientScaling)->RangeMultiplier(2)->Range(25, 400)->Complexity()->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
