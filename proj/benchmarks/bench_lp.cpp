#include <benchmark/benchmark.h>

#include "opaque/lp.hpp"

using namespace opaque;

namespace {

void BM_BuildInstance(benchmark::State& state) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const SegmentFamily fam = build_segment_family(FamilyMode::grid, {6, {}, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_instance(build_line_family(tri, 36, 1.0 / 30), fam).nonzeros());
  }
}
BENCHMARK(BM_BuildInstance)->Unit(benchmark::kMillisecond);

void BM_SolveRestricted(benchmark::State& state) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const int k = static_cast<int>(state.range(0));
  const LpInstance inst = build_instance(build_line_family(tri, k, 1.2 / k),
                                         build_segment_family(FamilyMode::grid, {6, steiner_angles(), 1.0}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(inst).value);
  state.counters["rows"] = static_cast<double>(inst.rows());
}
BENCHMARK(BM_SolveRestricted)->Arg(12)->Arg(36)->Arg(108)->Unit(benchmark::kMillisecond);

void BM_SolveUnrestricted(benchmark::State& state) {
  const ConvexPolygon tri = ConvexPolygon::unit_triangle();
  const LpInstance inst = build_instance(build_line_family(tri, 36, 1.0 / 30),
                                         build_segment_family(FamilyMode::grid, {4, {}, 1.0}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(inst).value);
  state.counters["cols"] = static_cast<double>(inst.cols());
}
BENCHMARK(BM_SolveUnrestricted)->Unit(benchmark::kMillisecond);

}  // namespace
