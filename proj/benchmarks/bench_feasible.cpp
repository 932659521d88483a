#include <benchmark/benchmark.h>

#include <random>

#include "attractor/canonical.hpp"
#include "attractor/generate.hpp"
#include "attractor/synthesis.hpp"

using namespace attractor;

namespace {

FeasibleSet sample_set(int max_keys) {
  std::mt19937_64 rng(5);
  return random_feasible(rng, max_keys);
}

void BM_validate(benchmark::State& state) {
  const FeasibleSet L = sample_set(static_cast<int>(state.range(0)));
  const auto keys = L.base().lambdas();
  std::set<VecKey> key_set;
  for (const auto& [v, lam] : keys) key_set.insert(v);
  for (auto _ : state) {
    auto base = CompleteBase::validate(key_set);
    auto copy = FeasibleSet::validate(base, L.rho_map(), L.sigma_map());
    benchmark::DoNotOptimize(copy);
  }
}
BENCHMARK(BM_validate)->Arg(8)->Arg(16)->Arg(32);

void BM_extraction_round_trip(benchmark::State& state) {
  const FeasibleSet L = sample_set(static_cast<int>(state.range(0)));
  const Configuration cfg = synthesize_configuration(L);
  const std::string sigma = sep_orbit_id({L.sector_count()});
  for (auto _ : state) {
    auto back = canonical_feasible_set(cfg, Orientation::CCW, sigma);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_extraction_round_trip)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
