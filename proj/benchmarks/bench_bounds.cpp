#include <benchmark/benchmark.h>

#include <cstdio>

#include "opaque/bounds.hpp"
#include "opaque/final_bound.hpp"

using namespace opaque;

namespace {

std::string label(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c=%g", c);
  return buf;
}

const double kExponents[] = {0.0, 10.0, 1000.0, 10000.0};

void BM_RatioClosedForm(benchmark::State& state) {
  const double c = kExponents[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(weighted_ratio_closed_form(c));
  state.SetLabel(label(c));
}
BENCHMARK(BM_RatioClosedForm)->DenseRange(0, 3);

void BM_RatioQuadrature(benchmark::State& state) {
  const double c = kExponents[state.range(0)];
  const WeightFunction z = WeightFunction::exponential(c);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_ratio(z, RatioMethod::quadrature));
  state.SetLabel(label(c));
}
BENCHMARK(BM_RatioQuadrature)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Restricted3Root(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(restricted3_delta());
}
BENCHMARK(BM_Restricted3Root);

void BM_OptimizeFinalBound(benchmark::State& state) {
  const double l3 = default_l3();
  for (auto _ : state) benchmark::DoNotOptimize(optimize_final_bound(l3).excess);
}
BENCHMARK(BM_OptimizeFinalBound)->Unit(benchmark::kMillisecond);

}  // namespace
