#include <benchmark/benchmark.h>

#include "grayson/cover.hpp"
#include "grayson/flowspace.hpp"
#include "grayson/sampling.hpp"

namespace {

using namespace grayson;

void BM_Distance(benchmark::State& state) {
  Rng rng(7);
  const int n = int(state.range(0));
  const InnerProduct s0 = random_spd(rng, n, 1.0);
  const InnerProduct s1 = random_spd(rng, n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(distance(s0, s1));
}
BENCHMARK(BM_Distance)->Arg(3)->Arg(5);

void BM_Geodesic(benchmark::State& state) {
  Rng rng(7);
  const int n = int(state.range(0));
  const InnerProduct s0 = random_spd(rng, n, 1.0);
  const InnerProduct s1 = random_spd(rng, n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(geodesic(s0, s1, 0.37));
}
BENCHMARK(BM_Geodesic)->Arg(3)->Arg(5);

void BM_Snf(benchmark::State& state) {
  Rng rng(11);
  IntMat m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rng.uniform_int(-9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf);

void BM_CanonicalPolygon(benchmark::State& state) {
  Rng rng(13);
  const InnerProduct s = random_integer_gram(rng, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_polygon(s));
}
BENCHMARK(BM_CanonicalPolygon)->Arg(3)->Arg(4);

void BM_DW(benchmark::State& state) {
  Rng rng(17);
  const NormalizedPoint x = random_det1_point(rng, 3, 1.0);
  const Sublattice w = random_saturated_sublattice(rng, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(d_w(x, w));
}
BENCHMARK(BM_DW);

void BM_ActiveSets(benchmark::State& state) {
  const NormalizedPoint x = axis_cusp_point(3, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(active_sets(x, 1.0));
}
BENCHMARK(BM_ActiveSets);

void BM_FsDistance(benchmark::State& state) {
  Rng rng(19);
  const NormalizedPoint p0 = random_det1_point(rng, 2, 0.8);
  const NormalizedPoint p1 = random_det1_point(rng, 2, 0.8);
  const NormalizedPoint q0 = random_det1_point(rng, 2, 0.8);
  const NormalizedPoint q1 = random_det1_point(rng, 2, 0.8);
  const auto c = GeneralizedGeodesic::through(p0, p1, -2, 2);
  const auto d = GeneralizedGeodesic::through(q0, q1, -1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fs_distance(c, d));
}
BENCHMARK(BM_FsDistance);

}  // namespace

BENCHMARK_MAIN();
