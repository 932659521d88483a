#pragma once

#include <array>
#include <string>
#include <vector>

#include "attractor/feasible.hpp"
#include "attractor/synthesis.hpp"
#include "attractor/vec2.hpp"

namespace attractor {

struct Polyline {
  enum class Kind { Separatrix, Representative, Generic };

  std::string orbit;
  Kind kind = Kind::Generic;
  std::vector<Vec2> vertices;  // plane coordinates
};

// Renderable phase portrait of the constructed flow on the punctured plane.
// This is the pre-collapse flow: the singular set is drawn shaded instead of
// being identified to the origin; off that set the orbits are the same.
struct PortraitDoc {
  std::vector<Polyline> polylines;
  double singular_disk_radius = 0;
  // null blocks in strip coordinates (x_lo, x_hi, y_lo, y_hi); shaded as
  // annular sectors in the plane
  std::vector<std::array<double, 4>> shaded_regions;
  int t = 1;
  std::string metadata_json;

  std::string to_svg() const;
  std::string to_csv() const;  // orbit,index,x,y with 17 significant digits
};

struct PortraitOptions {
  double step = 1e-3;
  double max_arc = 40;
  double ymax = 3;
  int samples_per_block = 2;
  unsigned seed = 1;
};

// Assembles a document from already-traced polylines.
PortraitDoc export_portrait(std::vector<Polyline> polylines,
                            std::string metadata_json);

// Integrates the direction-normalized strip field from one seed per
// separatrix and representative orbit plus a deterministic grid of generic
// seeds, and projects everything to the plane.
PortraitDoc render_portrait(const FeasibleSet& L, const PortraitOptions& opts);

std::string format_double17(double v);

}  // namespace attractor
