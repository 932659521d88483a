#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "attractor/feasible.hpp"

namespace attractor {

// mt19937_64 output is fully specified, so modulo draws keep generated
// fixtures identical across platforms (the std distributions are not
// portable).
inline int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Uniform-ish random valid feasible set with 2 <= |base| <= max_keys.
// Resamples until conditions (iii)/(iv) hold.
FeasibleSet random_feasible(std::mt19937_64& rng, int max_keys);

// Every valid feasible set whose base has at most max_keys keys.
std::vector<FeasibleSet> enumerate_feasible(int max_keys);

}  // namespace attractor
