#pragma once

#include <string>
#include <vector>

#include "attractor/integrate.hpp"
#include "attractor/vec2.hpp"

namespace attractor {

// The explicit cubic-quintic system with a globally attracting, unstable
// origin:
//   x' = -((1 + x^2) y + x^3)^5
//   y' = y^2 (y^2 + x^3)
Vec2 eval_example_field(double x, double y);

// The three sign functions y, y^2 + x^3, (1 + x^2) y + x^3 split the plane
// into six open regions with fixed flow direction.
enum class RegionLabel { U1, U2, U3, U4, U5, U6, Isocline, Origin };

RegionLabel classify_region(double x, double y);

const char* region_name(RegionLabel r);

struct ExampleOptions {
  double step = 1e-3;
  double budget = 1e4;
  // The field degenerates to order 15 along the x-axis, so the generic
  // 1e-12 cut-off would stop orbits far from the origin.
  double singular_tolerance = 1e-300;
};

DirectionField example_field(double singular_tolerance = 1e-300);

// y-coordinate of the first crossing of y = -2x (x < 0) for the orbit
// through (0, y0). Throws IntegrateError::NoCrossing if the budget runs out.
double crossing_map_Y(double y0, const ExampleOptions& opts = {});

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Deterministic quasi-random points (Halton bases 2 and 3) in [lo,hi]^2.
std::vector<Vec2> halton_points(int count, double lo, double hi);

// Forward integration of each sample until it enters the eps-ball at the
// origin; one check line per sample with the arc length spent.
Report verify_global_attraction(const std::vector<Vec2>& samples, double eps,
                                const ExampleOptions& opts = {});

// Grid checks of the closed-form bounds behind the crossing-map estimate
// (ratio flatness on the far region, the three factor bounds, the -1/(4y)
// ratio bound) plus the rectangle-field line-crossing bound.
Report check_inequalities(int density);

// Skeleton signature of the elliptic saddle: invariant attracted axes,
// homoclinic loop seeds closing up at the origin both ways, heteroclinic
// seeds escaping backward.
Report verify_elliptic_saddle(const ExampleOptions& opts = {});

}  // namespace attractor
