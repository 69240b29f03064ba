// Serial reference vs OpenMP for each parallel kernel. Arg 0 = serial, 1 = parallel.

#include "conecat/closed_geodesics.hpp"
#include "conecat/deformation.hpp"
#include "conecat/triangle_group.hpp"
#include "conecat/trig.hpp"

#include <benchmark/benchmark.h>

using namespace conecat;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

TriangleShape octant() { return TriangleShape::from_angles(ModelKappa(4.0), {kPi / 2, kPi / 2, kPi / 2}); }

void BM_ClosedGeodesics(benchmark::State& state) {
  const auto s = triangle_group_cover(octant(), {2, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(find_closed_geodesics(s, kPi, {}, mode(state)));
  state.SetLabel(mode(state) == Exec::Serial ? "serial" : "parallel");
}

void BM_CatSample(benchmark::State& state) {
  const auto tri = model_space_triangle(TriangleShape(ModelKappa(4.0), {0.6, 0.7, 0.8}));
  for (auto _ : state) benchmark::DoNotOptimize(cat_sample_test(tri, ModelKappa(4.0), 400, mode(state)));
  state.SetLabel(mode(state) == Exec::Serial ? "serial" : "parallel");
}

void BM_IncenterBilipschitz(benchmark::State& state) {
  const auto t = octant();
  for (auto _ : state) benchmark::DoNotOptimize(incenter_bilipschitz(t, 0.0, 128, mode(state)));
  state.SetLabel(mode(state) == Exec::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_ClosedGeodesics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CatSample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IncenterBilipschitz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
