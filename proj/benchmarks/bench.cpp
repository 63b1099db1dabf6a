#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "fpplab/directed_forest.hpp"
#include "fpplab/proximity_graph.hpp"
#include "fpplab/shortest_paths.hpp"

using namespace fpplab;

namespace {

std::shared_ptr<geom::PointSet> cached_sample(double half) {
  static std::map<double, std::shared_ptr<geom::PointSet>> cache;
  auto& slot = cache[half];
  if (!slot) {
    slot = std::make_shared<geom::PointSet>(
        geom::sample_ppp({{0, 0}, half, half}, 1.0, {424242, 0}));
  }
  return slot;
}

void bm_sample(benchmark::State& state) {
  double half = (double)state.range(0);
  for (auto _ : state) {
    auto ps = geom::sample_ppp({{0, 0}, half, half}, 1.0,
                               {424242, (uint64_t)state.iterations()});
    benchmark::DoNotOptimize(ps.points.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          (int64_t)(4.0 * half * half));
}

void bm_delaunay(benchmark::State& state) {
  auto ps = cached_sample((double)state.range(0));
  for (auto _ : state) {
    auto g = graphs::build_delaunay(ps);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetItemsProcessed(state.iterations() * ps->size());
}

void bm_rng(benchmark::State& state) {
  auto ps = cached_sample((double)state.range(0));
  auto del = graphs::build_delaunay(ps);
  for (auto _ : state) {
    auto g = graphs::rng_from_delaunay(del);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetItemsProcessed(state.iterations() * ps->size());
}

void bm_tree(benchmark::State& state) {
  auto ps = cached_sample((double)state.range(0));
  auto g = graphs::build_delaunay(ps);
  int root = geom::nearest_vertex(*ps, {0, 0});
  for (auto _ : state) {
    auto tree = fpp::shortest_path_tree(g, root);
    benchmark::DoNotOptimize(tree.dist.data());
  }
  state.SetItemsProcessed(state.iterations() * ps->size());
}

void bm_forest(benchmark::State& state) {
  auto ps = cached_sample((double)state.range(0));
  auto g = graphs::build_delaunay(ps);
  double half = (double)state.range(0);
  for (auto _ : state) {
    auto f = forest::build_directed_forest(g, {{1, 0}, 0.75 * half});
    benchmark::DoNotOptimize(f.successor.data());
  }
  state.SetItemsProcessed(state.iterations() * ps->size());
}

BENCHMARK(bm_sample)->Arg(50)->Arg(150);
BENCHMARK(bm_delaunay)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rng)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_tree)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_forest)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
