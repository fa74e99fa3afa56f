// Micro-benchmarks for the hot paths: family construction, hole enumeration,
// side classification, and the star+tree search.

#include <benchmark/benchmark.h>

#include "holescope/generators.hpp"
#include "holescope/geometry.hpp"
#include "holescope/holes.hpp"
#include "holescope/plane_sub.hpp"

namespace {

using namespace holescope;

void BM_convex_gon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convex_gon(n));
}
BENCHMARK(BM_convex_gon)->Arg(12)->Arg(20)->Arg(30);

void BM_twisted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twisted(n));
}
BENCHMARK(BM_twisted)->Arg(12)->Arg(20);

void BM_dn_family(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dn_family(n));
}
BENCHMARK(BM_dn_family)->Arg(7)->Arg(11);

void BM_from_points(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PointConfig cfg = random_points(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(from_points(cfg));
}
BENCHMARK(BM_from_points)->Arg(20)->Arg(30);

void BM_classify_sides(benchmark::State& state) {
  Drawing d = convex_gon(static_cast<int>(state.range(0)));
  const std::vector<VertexId> cycle{1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(classify_sides(d, cycle));
}
BENCHMARK(BM_classify_sides)->Arg(12)->Arg(30);

void BM_enumerate_4holes(benchmark::State& state) {
  Drawing d = random_convex_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_k_holes(d, 4));
}
BENCHMARK(BM_enumerate_4holes)->Arg(15)->Arg(25);

void BM_first_6hole(benchmark::State& state) {
  Drawing d = random_convex_instance(30, 7);
  for (auto _ : state) benchmark::DoNotOptimize(first_k_hole(d, 6));
}
BENCHMARK(BM_first_6hole);

void BM_star_tree(benchmark::State& state) {
  Drawing d = random_convex_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_plane_star_tree(d, 1));
}
BENCHMARK(BM_star_tree)->Arg(15)->Arg(25);

void BM_empty_triangles_twisted(benchmark::State& state) {
  Drawing d = twisted(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(empty_triangles(d));
}
BENCHMARK(BM_empty_triangles_twisted)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
