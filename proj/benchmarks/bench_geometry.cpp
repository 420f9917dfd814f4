#include <benchmark/benchmark.h>

#include <random>

#include "opaque/barrier.hpp"
#include "opaque/overlap.hpp"

using namespace opaque;

namespace {

Barrier random_barrier(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Segment> segs;
  while (static_cast<int>(segs.size()) < n) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (a != b) segs.emplace_back(a, b);
  }
  return Barrier(std::move(segs));
}

void BM_ProjectSegments(benchmark::State& state) {
  const Barrier b = random_barrier(static_cast<int>(state.range(0)), 1);
  double alpha = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_segments(b.segments(), Angle(alpha)).measure());
    alpha += 0.001;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectSegments)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_IsBarrierSampling(benchmark::State& state) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  // Two sides plus a disconnected stub: forces the sampling path.
  const Barrier b = make_two_sides_barrier().concat(
      Barrier(std::vector<Segment>{Segment({0.2, -0.1}, {0.3, -0.1})}));
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_barrier(b, tri, resolution).status);
}
BENCHMARK(BM_IsBarrierSampling)->Arg(720)->Arg(10000);

void BM_IsBarrierConnectivity(benchmark::State& state) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const Barrier o = make_steiner_barrier();
  for (auto _ : state) benchmark::DoNotOptimize(is_barrier(o, tri, 720).status);
}
BENCHMARK(BM_IsBarrierConnectivity);

void BM_ReduceBarrier(benchmark::State& state) {
  const Barrier b = random_barrier(1000, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_barrier(b, GridOffset::zero).size());
}
BENCHMARK(BM_ReduceBarrier);

void BM_ProjectionIntegral(benchmark::State& state) {
  const Barrier b = random_barrier(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(projection_integral(b));
}
BENCHMARK(BM_ProjectionIntegral)->Arg(4)->Arg(16);

}  // namespace
