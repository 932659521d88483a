#include "attractor/example_system.hpp"

#include <cmath>
#include <cstdio>

#include "attractor/parallel.hpp"
#include "attractor/synthesis.hpp"

namespace attractor {

namespace {

std::string format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Vec2 eval_example_field(double x, double y) {
  const double s3 = (1 + x * x) * y + x * x * x;
  const double s3_2 = s3 * s3;
  const double p = -(s3_2 * s3_2 * s3);
  const double q = y * y * (y * y + x * x * x);
  return {p, q};
}

RegionLabel classify_region(double x, double y) {
  if (x == 0 && y == 0) return RegionLabel::Origin;
  const double s1 = y;
  const double s2 = y * y + x * x * x;
  const double s3 = (1 + x * x) * y + x * x * x;
  if (s1 == 0 || s2 == 0 || s3 == 0) return RegionLabel::Isocline;
  if (s1 > 0) {
    if (s2 > 0) return s3 > 0 ? RegionLabel::U1 : RegionLabel::Isocline;
    return s3 > 0 ? RegionLabel::U2 : RegionLabel::U3;
  }
  if (s2 < 0) return s3 < 0 ? RegionLabel::U4 : RegionLabel::Isocline;
  return s3 < 0 ? RegionLabel::U5 : RegionLabel::U6;
}

const char* region_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::U1: return "U1";
    case RegionLabel::U2: return "U2";
    case RegionLabel::U3: return "U3";
    case RegionLabel::U4: return "U4";
    case RegionLabel::U5: return "U5";
    case RegionLabel::U6: return "U6";
    case RegionLabel::Isocline: return "isocline";
    case RegionLabel::Origin: return "origin";
  }
  return "?";
}

DirectionField example_field(double singular_tolerance) {
  DirectionField f;
  f.eval = [](Vec2 p) { return eval_example_field(p.x, p.y); };
  f.singular_tolerance = singular_tolerance;
  return f;
}

double crossing_map_Y(double y0, const ExampleOptions& opts) {
  const DirectionField f = example_field(opts.singular_tolerance);
  // first crossing of y = -2x from the 2x + y > 0 side
  const auto hit = detect_crossing(f, {0, y0},
                                   EventSpec::line_cross(2, 1, 0, -1),
                                   opts.step, opts.budget);
  if (!hit || hit->x >= 0)
    throw IntegrateError(IntegrateError::Code::NoCrossing,
                         "no crossing of y = -2x from (0, " +
                             std::to_string(y0) + ") within budget");
  return hit->y;
}

std::vector<Vec2> halton_points(int count, double lo, double hi) {
  auto halton = [](int index, int base) {
    double f = 1, r = 0;
    for (int i = index; i > 0; i /= base) {
      f /= base;
      r += f * (i % base);
    }
    return r;
  };
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k)
    out.push_back({lo + (hi - lo) * halton(k, 2), lo + (hi - lo) * halton(k, 3)});
  return out;
}

Report verify_global_attraction(const std::vector<Vec2>& samples, double eps,
                                const ExampleOptions& opts) {
  const DirectionField f = example_field(opts.singular_tolerance);
  Report report;
  report.checks.resize(samples.size());
  parallel_for(samples.size(), [&](std::size_t k) {
    const Vec2 p = samples[k];
    CheckLine line;
    line.name = "sample (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                ") reaches the " + std::to_string(eps) + "-ball";
    if (p.norm() < eps) {
      line.ok = true;
      line.detail = "started inside";
    } else {
      IntegrateOptions io;
      io.step = opts.step;
      io.budget = opts.budget;
      const Trajectory traj =
          integrate_orbit(f, p, io, {EventSpec::ball_enter({0, 0}, eps)});
      line.ok = traj.termination == Termination::EventHit;
      line.detail = "arc length " + std::to_string(traj.arc_length);
    }
    report.checks[k] = std::move(line);
  });
  return report;
}

namespace {

void grid_check(Report& report, const std::string& name, int density,
                double x_lo, double x_hi,
                const std::function<double(double)>& y_lo,
                const std::function<double(double)>& y_hi,
                const std::function<bool(double, double)>& holds) {
  CheckLine line;
  line.name = name;
  line.ok = true;
  int tested = 0;
  for (int i = 0; i < density && line.ok; ++i) {
    const double x = x_lo + (x_hi - x_lo) * (i + 0.5) / density;
    const double lo = y_lo(x), hi = y_hi(x);
    if (!(lo < hi)) continue;
    for (int j = 0; j < density; ++j) {
      const double y = lo + (hi - lo) * (j + 0.5) / density;
      ++tested;
      if (!holds(x, y)) {
        line.ok = false;
        line.detail = "violated at (" + format(x) + ", " + format(y) + ")";
        break;
      }
    }
  }
  if (line.ok) line.detail = std::to_string(tested) + " grid points";
  report.checks.push_back(std::move(line));
}

}  // namespace

Report check_inequalities(int density) {
  Report report;

  // ratio flatness -1 <= Q/P <= 0 on the U1 part of y >= 1, clipped box
  grid_check(
      report, "-1 <= Q/P <= 0 on U1, y >= 1 (box 50)", density, -50, 50,
      [](double) { return 1.0; }, [](double) { return 50.0; },
      [](double x, double y) {
        if (y * y + x * x * x <= 0) return true;  // outside U1
        const Vec2 v = eval_example_field(x, y);
        const double ratio = v.y / v.x;
        return -1 <= ratio && ratio <= 0;
      });

  // x^3/(1+x^2) <= (-x)^{3/2} on [-1/8, 0]
  grid_check(
      report, "x^3/(1+x^2) <= (-x)^(3/2) on [-1/8, 0]", density, -0.125, 0,
      [](double) { return 0.0; }, [](double) { return 1.0; },
      [](double x, double) {
        return x * x * x / (1 + x * x) <= std::pow(-x, 1.5);
      });

  // y + x^3/(1+x^2) <= 2 (y - (-x)^{3/2}) for y >= -2x
  grid_check(
      report, "y + x^3/(1+x^2) <= 2(y - (-x)^(3/2)) for y >= -2x", density,
      -0.125, 0, [](double x) { return -2 * x; },
      [](double) { return 0.25; },
      [](double x, double y) {
        return y + x * x * x / (1 + x * x) <= 2 * (y - std::pow(-x, 1.5));
      });

  // (1+x^2)^{-5} > 1/2 on [-1/8, 0]
  grid_check(
      report, "(1+x^2)^(-5) > 1/2 on [-1/8, 0]", density, -0.125, 0,
      [](double) { return 0.0; }, [](double) { return 1.0; },
      [](double x, double) {
        const double d = 1 + x * x;
        return 1 / (d * d * d * d * d) > 0.5;
      });

  // Q/P <= -1/(4y) on the crossing-map strip
  grid_check(
      report, "Q/P <= -1/(4y) on [-1/8, 0] x [-2x, 1/4]", density, -0.125, 0,
      [](double x) { return -2 * x; }, [](double) { return 0.25; },
      [](double x, double y) {
        if (y <= 0) return true;
        const Vec2 v = eval_example_field(x, y);
        if (v.x == 0) return false;
        return v.y / v.x <= -1 / (4 * y);
      });

  // rectangle field crosses the lines y = 1 + a(x-1) rightward near (1,1)
  grid_check(
      report, "a g1(1-u, 1-au) - g2(1-u, 1-au) > 0 on (0, 1/2)^2", density,
      0, 0.5, [](double) { return 0.0; }, [](double) { return 0.5; },
      [](double u, double w) {
        const double a = w / u;
        const Vec2 g = g_base(1 - u, 1 - w);
        return a * g.x - g.y > 0;
      });

  return report;
}

Report verify_elliptic_saddle(const ExampleOptions& opts) {
  const DirectionField f = example_field(opts.singular_tolerance);
  DirectionField rev = f;
  rev.eval = [](Vec2 p) { return -1.0 * eval_example_field(p.x, p.y); };

  IntegrateOptions io;
  io.step = opts.step;
  io.budget = opts.budget;

  Report report;

  // (a) both x-semiaxes are invariant orbits attracted to the origin
  for (const double x0 : {2.0, -2.0}) {
    const Trajectory traj = integrate_orbit(
        f, {x0, 0}, io, {EventSpec::ball_enter({0, 0}, 0.05)});
    double max_abs_y = 0;
    for (const Vec2& v : traj.vertices)
      max_abs_y = std::max(max_abs_y, std::abs(v.y));
    CheckLine line;
    line.name = "x-axis orbit from (" + std::to_string(x0) +
                ", 0) converges without leaving the axis";
    line.ok = traj.termination == Termination::EventHit && max_abs_y < 1e-9;
    line.detail = "max |y| = " + format(max_abs_y);
    report.checks.push_back(std::move(line));
  }

  // (b) seeds inside the loop region are homoclinic: both time directions
  // reach the origin ball
  for (const Vec2 seed : {Vec2{-0.3, 0.2}, Vec2{-0.15, 0.08}}) {
    bool fwd_ok, bwd_ok;
    {
      const Trajectory traj = integrate_orbit(
          f, seed, io, {EventSpec::ball_enter({0, 0}, 0.05)});
      fwd_ok = traj.termination == Termination::EventHit;
    }
    {
      const Trajectory traj = integrate_orbit(
          rev, seed, io, {EventSpec::ball_enter({0, 0}, 0.05)});
      bwd_ok = traj.termination == Termination::EventHit;
    }
    CheckLine line;
    line.name = "loop seed (" + std::to_string(seed.x) + ", " +
                std::to_string(seed.y) + ") is homoclinic";
    line.ok = fwd_ok && bwd_ok;
    line.detail = std::string("forward ") + (fwd_ok ? "ok" : "failed") +
                  ", backward " + (bwd_ok ? "ok" : "failed");
    report.checks.push_back(std::move(line));
  }

  // (c) lower half-plane and upper-axis seeds escape backward: heteroclinic
  for (const Vec2 seed : {Vec2{1, -1}, Vec2{-1, -1}, Vec2{0, 1}}) {
    IntegrateOptions esc = io;
    esc.domain_halfwidth = 1e3;
    esc.budget = 1e4;
    const Trajectory traj = integrate_orbit(rev, seed, esc);
    CheckLine line;
    line.name = "seed (" + std::to_string(seed.x) + ", " +
                std::to_string(seed.y) + ") escapes backward (heteroclinic)";
    line.ok = traj.termination == Termination::LeftDomain;
    line.detail = "arc length " + std::to_string(traj.arc_length);
    report.checks.push_back(std::move(line));
  }

  // forward convergence from the same het seeds
  {
    const Trajectory traj = integrate_orbit(
        f, {0, 1}, io, {EventSpec::ball_enter({0, 0}, 0.05)});
    CheckLine line;
    line.name = "forward orbit from (0, 1) reaches the 0.05-ball";
    line.ok = traj.termination == Termination::EventHit;
    line.detail = "arc length " + std::to_string(traj.arc_length);
    report.checks.push_back(std::move(line));
  }

  return report;
}

}  // namespace attractor
