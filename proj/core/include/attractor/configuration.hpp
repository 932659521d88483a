#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attractor/feasible.hpp"

namespace attractor {

enum class MarkClass { HetSep, HomSep, HetRep, HomRep };

inline bool is_het(MarkClass c) {
  return c == MarkClass::HetSep || c == MarkClass::HetRep;
}
inline bool is_sep(MarkClass c) {
  return c == MarkClass::HetSep || c == MarkClass::HomSep;
}

// One alpha- or omega-point of a skeleton orbit on the small circle around
// the attractor.
struct Mark {
  std::string orbit;
  EndKind end = EndKind::Omega;
  MarkClass cls = MarkClass::HetSep;

  friend bool operator==(const Mark&, const Mark&) = default;
};

struct ConfigError : std::runtime_error {
  enum class Code {
    SyntaxError,
    BadMarkCount,
    TrivialCase,
    CrossingChords,
    HetInsideHom,
    MissingRepresentative,
    NotHeteroclinic,
    NonRealizable,
  };

  ConfigError(Code c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}

  Code code;
};

// Cyclic word of marks, stored counterclockwise from an arbitrary anchor.
// Construction validates all structural invariants: per-orbit mark counts,
// well-nested homoclinic chords, heteroclinic marks outside every chord, and
// exactly one representative per sector and per chord.
class Configuration {
public:
  static Configuration validate(std::vector<Mark> marks);

  const std::vector<Mark>& marks() const { return marks_; }
  std::size_t size() const { return marks_.size(); }

  Configuration rotated(std::size_t shift) const;
  // Orientation flip: the cyclic word reversed, marks otherwise unchanged.
  Configuration mirrored() const;
  Configuration relabeled(const std::string& prefix) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

private:
  Configuration() = default;
  std::vector<Mark> marks_;
};

Configuration config_from_json_text(std::string_view text);
std::string config_to_json_text(const Configuration& cfg);

// Containment forest of the homoclinic chords, grouped into heteroclinic
// sectors (arcs between consecutive HetSep marks in stored order).
struct ChordNode {
  std::string orbit;      // HomSep orbit
  std::string rep_orbit;  // the HomRep directly inside
  std::vector<ChordNode> children;
};

struct Sector {
  std::string het_sep;  // HetSep mark closing the sector in stored order
  std::string het_rep;
  std::vector<ChordNode> chords;
};

struct NestingTree {
  std::vector<Sector> sectors;
};

NestingTree nesting_tree(const Configuration& cfg);

}  // namespace attractor
