#include <benchmark/benchmark.h>

#include "polymat/classify.hpp"

using namespace polymat;

namespace {

void BM_Delta(benchmark::State& state) {
  const Graph g = whisker(cycle_graph(static_cast<int>(state.range(0))));
  const CapacityVector c(g.n(), 3);
  for (auto _ : state) {
    int d = delta(g, c);
    benchmark::DoNotOptimize(d);
  }
}

void BM_BasesExchange(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  const CapacityVector c(g.n(), 2);
  for (auto _ : state) {
    BaseSet b = bases(g, c, BasesMode::exchange);
    benchmark::DoNotOptimize(b);
  }
}

void BM_BasesFilter(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  const CapacityVector c(g.n(), 2);
  for (auto _ : state) {
    BaseSet b = bases(g, c, BasesMode::filter);
    benchmark::DoNotOptimize(b);
  }
}

void BM_RankTable(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  const BaseSet b = bases(g, CapacityVector(g.n(), 1));
  for (auto _ : state) {
    RankTable t = rank_table(b);
    benchmark::DoNotOptimize(t);
  }
}

void BM_GorensteinReport(benchmark::State& state) {
  const Graph g = whisker(cycle_graph(static_cast<int>(state.range(0))));
  CapacityVector c(g.n(), 2);
  c.back() = 3;
  for (auto _ : state) {
    GorensteinReport r = gorenstein_report(g, c);
    benchmark::DoNotOptimize(r);
  }
}

void BM_VerifyHDescription(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = cycle_graph(n);
  const CapacityVector c(n, 2);
  const BaseSet b = bases(g, c);
  const HDescription h = box_description(n, 2);
  for (auto _ : state) {
    bool ok = verify_h_description(g, c, b, h, {});
    benchmark::DoNotOptimize(ok);
  }
}

}  // namespace

BENCHMARK(BM_Delta)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_BasesExchange)->Arg(6)->Arg(8);
BENCHMARK(BM_BasesFilter)->Arg(6)->Arg(8);
BENCHMARK(BM_RankTable)->Arg(8)->Arg(12);
BENCHMARK(BM_GorensteinReport)->Arg(3)->Arg(4);
BENCHMARK(BM_VerifyHDescription)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
