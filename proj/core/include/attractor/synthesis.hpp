#pragma once

#include <map>
#include <vector>

#include "attractor/configuration.hpp"
#include "attractor/feasible.hpp"
#include "attractor/vec2.hpp"

namespace attractor {

// Configuration of the flow constructed from L: marks are L's elements in
// lexicographic order, grouped into orbits sep:<key> (separatrix lines) and
// rep:<key> (representatives).
Configuration synthesize_configuration(const FeasibleSet& L);

std::string sep_orbit_id(const VecKey& v);
std::string rep_orbit_id(const VecKey& v);

// Zero set of one block's base-edge bump factor, in local coordinates on
// [-1,1]: a sorted union of closed intervals (points are degenerate
// intervals). kappa is sin^2 on each gap, normalized to 1 at the midpoint,
// which is C^1 with vanishing derivative at the gap ends.
struct ZeroSet {
  std::vector<std::pair<double, double>> intervals;

  bool contains(double x) const;
  // maximal open gaps between consecutive zero intervals
  std::vector<std::pair<double, double>> gaps() const;
};

double kappa_eval(const ZeroSet& zeros, double x_local);

ZeroSet f_zero_set(int s, int j);
ZeroSet g_zero_set(int r, int s, int j);

// Base fields on local coordinates.
Vec2 f_base(double x, double y);  // (x(x^2-1), -y), semiband [-1,1]x[0,inf)
Vec2 g_base(double x, double y);  // rectangle field on [-1,1]x[0,1]

struct BlockSpec {
  enum class Kind { F, GPlus, GMinus, Null };

  Kind kind = Kind::Null;
  VecKey key;           // owner key; empty for Null blocks
  double x_lo = 0, x_hi = 0;
  double y_lo = 0, y_hi = 0;  // F blocks use y_hi = +infinity
  int r = 0, s = 0, j = 0;
  ZeroSet zeros;
};

struct OrbitLine {
  bool vertical = false;
  double x = 0;                      // vertical ray x = const, y >= 0
  double x_lo = 0, x_hi = 0, y = 0;  // horizontal segment otherwise
};

struct BlockLayout {
  int t = 1;  // sector count; the strip is [0,t] x [-n+1, inf)
  int n = 2;  // deepest key length
  std::vector<BlockSpec> blocks;
  std::vector<std::vector<std::size_t>> bands;  // per band, sorted by x_lo
  std::vector<std::size_t> f_blocks;            // index by sector i-1
  std::map<VecKey, OrbitLine> orbit_lines;      // separatrix lines
  std::map<VecKey, OrbitLine> rep_rays;         // length-1 keys: x = i-1/2
  std::map<VecKey, Vec2> rep_seeds;             // deeper keys: point on rep
  std::map<VecKey, bool> rightward;             // flow direction on lines
};

struct StripField {
  BlockLayout layout;
};

StripField build_block_layout(const FeasibleSet& L);

// Field value at a strip point; x is taken mod t, points at or below the
// bottom line y = -n+1 and inside null blocks evaluate to zero.
Vec2 eval_strip_field(const StripField& field, Vec2 p);

//Appraises one block's formula at local coordinates.
Vec2 eval_block_local(const BlockSpec& block, double x_local, double y_local);

// Projection to the punctured plane: (e^y cos(2 pi x / t), e^y sin(...)).
Vec2 map_to_plane(int t, Vec2 strip_point);

}  // namespace attractor
