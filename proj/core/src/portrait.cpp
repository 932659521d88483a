#include "attractor/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "attractor/feasible_json.hpp"
#include "attractor/integrate.hpp"
#include "attractor/parallel.hpp"

namespace attractor {

std::string format_double17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string format_double9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

const char* kind_class(Polyline::Kind k) {
  switch (k) {
    case Polyline::Kind::Separatrix:
      return "separatrix";
    case Polyline::Kind::Representative:
      return "representative";
    case Polyline::Kind::Generic:
      return "generic";
  }
  return "generic";
}

}  // namespace

PortraitDoc export_portrait(std::vector<Polyline> polylines,
                            std::string metadata_json) {
  PortraitDoc doc;
  doc.polylines = std::move(polylines);
  doc.metadata_json = std::move(metadata_json);
  return doc;
}

std::string PortraitDoc::to_csv() const {
  std::string out = "orbit,index,x,y\n";
  for (const Polyline& pl : polylines)
    for (std::size_t k = 0; k < pl.vertices.size(); ++k) {
      out += pl.orbit;
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += format_double17(pl.vertices[k].x);
      out += ',';
      out += format_double17(pl.vertices[k].y);
      out += '\n';
    }
  return out;
}

std::string PortraitDoc::to_svg() const {
  double extent = singular_disk_radius;
  for (const Polyline& pl : polylines)
    for (const Vec2& v : pl.vertices)
      extent = std::max({extent, std::abs(v.x), std::abs(v.y)});
  if (extent <= 0) extent = 1;
  extent *= 1.05;

  std::string svg;
  const std::string r = format_double9(extent);
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-" + r + " -" +
         r + " " + format_double9(2 * extent) + " " +
         format_double9(2 * extent) + "\">\n";
  svg += "  <style>\n"
         "    .separatrix { stroke: #111; fill: none; stroke-width: " +
         format_double9(extent / 260) + "; }\n"
         "    .representative { stroke: #777; fill: none; stroke-width: " +
         format_double9(extent / 340) + "; }\n"
         "    .generic { stroke: #bbb; fill: none; stroke-width: " +
         format_double9(extent / 500) + "; }\n"
         "    .singular { fill: #ddd; stroke: none; }\n"
         "  </style>\n";

  // y is flipped so the mathematical orientation matches the picture
  auto pt = [](Vec2 v) {
    return format_double9(v.x) + "," + format_double9(-v.y);
  };

  for (const auto& [x_lo, x_hi, y_lo, y_hi] : shaded_regions) {
    std::string pts;
    const int arc_samples = 24;
    for (int k = 0; k <= arc_samples; ++k) {
      const double x = x_lo + (x_hi - x_lo) * k / arc_samples;
      pts += pt(map_to_plane(t, {x, y_hi})) + " ";
    }
    for (int k = arc_samples; k >= 0; --k) {
      const double x = x_lo + (x_hi - x_lo) * k / arc_samples;
      pts += pt(map_to_plane(t, {x, y_lo})) + " ";
    }
    svg += "  <polygon class=\"singular\" points=\"" + pts + "\"/>\n";
  }
  if (singular_disk_radius > 0)
    svg += "  <circle class=\"singular\" cx=\"0\" cy=\"0\" r=\"" +
           format_double9(singular_disk_radius) + "\"/>\n";

  for (const Polyline& pl : polylines) {
    if (pl.vertices.size() < 2) continue;
    svg += "  <polyline class=\"";
    svg += kind_class(pl.kind);
    svg += "\" data-orbit=\"" + pl.orbit + "\" points=\"";
    for (const Vec2& v : pl.vertices) {
      svg += pt(v);
      svg += ' ';
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

namespace {

// forward plus backward trace through the seed, in strip coordinates
std::vector<Vec2> trace_both_ways(const StripField& field, Vec2 seed,
                                  double step, double max_arc, double ymax) {
  DirectionField dir;
  dir.eval = [&field](Vec2 p) { return eval_strip_field(field, p); };

  IntegrateOptions opts;
  opts.step = step;
  opts.budget = max_arc;

  DirectionField rev;
  rev.eval = [&field](Vec2 p) { return -1.0 * eval_strip_field(field, p); };

  const std::vector<EventSpec> ceiling = {
      EventSpec::line_cross(0, 1, -ymax, +1)};

  const Trajectory fwd = integrate_orbit(dir, seed, opts, ceiling);
  const Trajectory bwd = integrate_orbit(rev, seed, opts, ceiling);

  std::vector<Vec2> verts(bwd.vertices.rbegin(), bwd.vertices.rend());
  verts.insert(verts.end(), fwd.vertices.begin() + 1, fwd.vertices.end());
  return verts;
}

}  // namespace

PortraitDoc render_portrait(const FeasibleSet& L, const PortraitOptions& opts) {
  const StripField field = build_block_layout(L);
  const BlockLayout& lay = field.layout;

  struct Seed {
    std::string orbit;
    Polyline::Kind kind;
    Vec2 at;
    bool vertical_ray = false;
  };
  std::vector<Seed> seeds;

  for (const auto& [v, line] : lay.orbit_lines) {
    if (line.vertical)
      seeds.push_back({sep_orbit_id(v), Polyline::Kind::Separatrix,
                       {line.x, opts.ymax}, true});
    else
      seeds.push_back({sep_orbit_id(v), Polyline::Kind::Separatrix,
                       {(line.x_lo + line.x_hi) / 2, line.y}});
  }
  for (const auto& [v, ray] : lay.rep_rays)
    seeds.push_back({rep_orbit_id(v), Polyline::Kind::Representative,
                     {ray.x, opts.ymax}, true});
  for (const auto& [v, at] : lay.rep_seeds)
    seeds.push_back({rep_orbit_id(v), Polyline::Kind::Representative, at});

  int generic_id = 0;
  for (const BlockSpec& b : lay.blocks) {
    if (b.kind == BlockSpec::Kind::Null) continue;
    const double y_top = std::isinf(b.y_hi) ? opts.ymax : b.y_hi;
    for (int gx = 0; gx < opts.samples_per_block; ++gx)
      for (int gy = 0; gy < opts.samples_per_block; ++gy) {
        const double fx = (gx + 0.37) / opts.samples_per_block;
        const double fy = (gy + 0.59) / opts.samples_per_block;
        seeds.push_back({"orbit" + std::to_string(generic_id++),
                         Polyline::Kind::Generic,
                         {b.x_lo + fx * (b.x_hi - b.x_lo),
                          b.y_lo + fy * (y_top - b.y_lo)}});
      }
  }

  std::vector<Polyline> lines(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t k) {
    const Seed& s = seeds[k];
    Polyline pl;
    pl.orbit = s.orbit;
    pl.kind = s.kind;
    std::vector<Vec2> strip;
    if (s.vertical_ray) {
      // invariant vertical line; only the downward trace is needed
      DirectionField dir;
      dir.eval = [&field](Vec2 p) { return eval_strip_field(field, p); };
      IntegrateOptions io;
      io.step = opts.step;
      io.budget = opts.max_arc;
      strip = integrate_orbit(dir, s.at, io).vertices;
    } else {
      strip = trace_both_ways(field, s.at, opts.step, opts.max_arc, opts.ymax);
    }
    pl.vertices.reserve(strip.size());
    for (const Vec2& p : strip) pl.vertices.push_back(map_to_plane(lay.t, p));
    lines[k] = std::move(pl);
  });

  nlohmann::json meta;
  meta["feasible"] = nlohmann::json::parse(feasible_to_json_text(L, false));
  meta["t"] = lay.t;
  meta["n"] = lay.n;
  meta["options"] = {{"step", opts.step},
                     {"max_arc", opts.max_arc},
                     {"ymax", opts.ymax},
                     {"samples_per_block", opts.samples_per_block},
                     {"seed", opts.seed}};
  meta["note"] =
      "pre-collapse flow: the shaded singular set is not identified to a "
      "point; orbits off it are unchanged";

  PortraitDoc doc = export_portrait(std::move(lines), meta.dump(2) + "\n");
  doc.t = lay.t;
  doc.singular_disk_radius = std::exp(-static_cast<double>(lay.n) + 1.0);
  for (const BlockSpec& b : lay.blocks)
    if (b.kind == BlockSpec::Kind::Null)
      doc.shaded_regions.push_back({b.x_lo, b.x_hi, b.y_lo, b.y_hi});
  return doc;
}

}  // namespace attractor
