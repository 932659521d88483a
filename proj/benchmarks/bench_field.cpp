#include <benchmark/benchmark.h>

#include <random>

#include "attractor/example_system.hpp"
#include "attractor/generate.hpp"
#include "attractor/synthesis.hpp"

using namespace attractor;

namespace {

void BM_strip_field_eval(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const FeasibleSet L = random_feasible(rng, static_cast<int>(state.range(0)));
  const StripField field = build_block_layout(L);
  double x = 0.123, y = 1.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_strip_field(field, {x, y}));
    x += 0.37;
    y -= 0.11;
    if (y < -field.layout.n) y = 2.9;
  }
}
BENCHMARK(BM_strip_field_eval)->Arg(8)->Arg(24);

void BM_example_field_eval(benchmark::State& state) {
  double x = -1.1, y = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_example_field(x, y));
    x += 1e-4;
    y -= 1e-4;
  }
}
BENCHMARK(BM_example_field_eval);

}  // namespace
