#include <benchmark/benchmark.h>

#include "attractor/example_system.hpp"
#include "attractor/integrate.hpp"

using namespace attractor;

namespace {

void BM_rk4_circular(benchmark::State& state) {
  DirectionField f;
  f.eval = [](Vec2 p) { return Vec2{-p.y, p.x}; };
  IntegrateOptions io;
  io.step = 1e-3;
  io.budget = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_orbit(f, {1, 0}, io));
  }
}
BENCHMARK(BM_rk4_circular);

void BM_crossing_map(benchmark::State& state) {
  ExampleOptions opts;
  opts.step = 1e-2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossing_map_Y(1.0, opts));
  }
}
BENCHMARK(BM_crossing_map);

}  // namespace
