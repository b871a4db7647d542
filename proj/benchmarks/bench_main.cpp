#include <benchmark/benchmark.h>

#include "polypart/generators.hpp"
#include "polypart/hamsandwich.hpp"
#include "polypart/incidence.hpp"
#include "polypart/partition.hpp"
#include "polypart/spantree.hpp"
#include "polypart/unipoly.hpp"

namespace {

using namespace polypart;

void bm_bisection(benchmark::State& state) {
  long n = state.range(0);
  auto pts = random_points(2 * n, 2, 11);
  std::vector<std::vector<Point>> sets{
      {pts.begin(), pts.begin() + n}, {pts.begin() + n, pts.end()}};
  BisectionOptions bo;
  for (auto _ : state) {
    bo.seed += 1;
    benchmark::DoNotOptimize(find_bisecting_polynomial(sets, 1, bo));
  }
}
BENCHMARK(bm_bisection)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void bm_partition(benchmark::State& state) {
  long n = state.range(0);
  auto pts = random_points(n, 2, 23);
  PartitionOptions po;
  for (auto _ : state) {
    po.seed += 1;
    benchmark::DoNotOptimize(build_partition(pts, rat(8), po));
  }
}
BENCHMARK(bm_partition)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void bm_sign_classes_along_line(benchmark::State& state) {
  auto pts = random_points(state.range(0), 2, 42);
  PartitionOptions po;
  po.seed = 1;
  auto pr = build_partition(pts, rat(state.range(0) / 8), po);
  long c = 0;
  for (auto _ : state) {
    ++c;
    benchmark::DoNotOptimize(
        sign_classes_along_line(pr.factors, Line(rat(3), rat(2 + c), rat(7))));
  }
}
BENCHMARK(bm_sign_classes_along_line)->Arg(64)->Arg(256)
    ->Unit(benchmark::kMillisecond);

void bm_isolate_roots(benchmark::State& state) {
  // Wilkinson-style polynomial with clustered integer roots.
  long deg = state.range(0);
  UniPoly g({rat(1)});
  for (long k = 1; k <= deg; ++k) g = g * UniPoly({rat(-k), rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(g));
}
BENCHMARK(bm_isolate_roots)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void bm_incidences(benchmark::State& state) {
  auto inst = random_st_instance(state.range(0), state.range(0), 5);
  LineSet ls;
  for (const auto& l : inst.lines) ls.add(l);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_incidences_lines(inst.points, ls));
}
BENCHMARK(bm_incidences)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void bm_tree_build(benchmark::State& state) {
  auto pts = random_points(state.range(0), 2, 9);
  TreeBuildOptions to;
  for (auto _ : state) {
    to.seed += 1;
    benchmark::DoNotOptimize(build_low_crossing_tree(pts, to));
  }
}
BENCHMARK(bm_tree_build)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void bm_crossings_sampled(benchmark::State& state) {
  auto pts = random_points(256, 2, 9);
  TreeBuildOptions to;
  to.seed = 4;
  auto tr = build_low_crossing_tree(pts, to);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        crossing_number(tr.tree, CrossingMode::Sampled, 2000, 7));
}
BENCHMARK(bm_crossings_sampled)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
