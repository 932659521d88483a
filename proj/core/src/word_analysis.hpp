#pragma once

// Internal helper shared by configuration validation and canonical
// extraction: structural analysis of a linearized mark word whose last
// position is a HetSep omega-point.

#include <string>
#include <vector>

#include "attractor/configuration.hpp"

namespace attractor::detail {

struct Chord {
  std::string orbit;
  MarkClass cls = MarkClass::HomSep;
  int lo = -1;
  int hi = -1;
  int omega_pos = -1;
  int parent = -1;        // nearest enclosing chord of any class
  int hom_parent = -1;    // nearest enclosing HomSep chord
  int sector = -1;        // sector index when hom_parent == -1
  std::vector<int> hom_children;  // direct HomSep descendants (HomSep only)
  int rep = -1;           // direct HomRep chord (HomSep chords only)
};

struct WordInfo {
  std::vector<Chord> chords;
  std::vector<int> het_sep_pos;              // ascending; back() == last index
  std::vector<std::string> het_sep_orbit;    // aligned with het_sep_pos
  std::vector<int> sector_rep_pos;           // HetRep position per sector
  std::vector<std::string> sector_rep_orbit;
  std::vector<std::vector<int>> sector_chords;  // depth-0 HomSep chords
};

// Validates counts, nesting, representative placement; throws ConfigError.
WordInfo analyze_word(const std::vector<Mark>& linear);

}  // namespace attractor::detail
