#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "attractor/configuration.hpp"
#include "attractor/feasible.hpp"

namespace attractor {

enum class Orientation { CCW, CW };

inline const char* orientation_name(Orientation o) {
  return o == Orientation::CCW ? "ccw" : "cw";
}

// Element -> position of the corresponding mark in cfg.marks() (stored
// indexing), aligned with FeasibleSet::elements().
using MarkBijection = std::vector<std::size_t>;

// Canonical feasible set of a configuration for a chosen orientation and
// heteroclinic separatrix. Throws ConfigError::NotHeteroclinic if
// sigma_orbit is not a HetSep, and ConfigError::NonRealizable if the
// extracted data violates the feasibility conditions or the mark directions
// (such a configuration comes from no flow of this class).
FeasibleSet canonical_feasible_set(const Configuration& cfg, Orientation theta,
                                   const std::string& sigma_orbit,
                                   MarkBijection* bijection = nullptr);

struct EquivalenceWitness {
  Orientation theta1 = Orientation::CCW;
  std::string sigma1;
  Orientation theta2 = Orientation::CCW;
  std::string sigma2;
};

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
};

// Enumerates every orientation and HetSep choice on both sides
// (orientations CCW then CW, separatrices in stored anchor order) and
// reports the first matching pair.
EquivalenceResult decide_equivalence(const Configuration& a,
                                     const Configuration& b);

std::vector<std::string> het_separatrices(const Configuration& cfg);

}  // namespace attractor
