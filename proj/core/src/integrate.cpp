#include "attractor/integrate.hpp"

#include <cmath>

namespace attractor {

double EventSpec::value(Vec2 p) const {
  switch (kind) {
    case Kind::LineCross:
      return a * p.x + b * p.y + c;
    case Kind::BallEnter:
    case Kind::BallExit:
      return (p - center).norm() - radius;
  }
  return 0;
}

bool EventSpec::triggers(double before, double after) const {
  const bool pos_to_neg = before > 0 && after <= 0;
  const bool neg_to_pos = before < 0 && after >= 0;
  switch (kind) {
    case Kind::LineCross:
      if (direction < 0) return pos_to_neg;
      if (direction > 0) return neg_to_pos;
      return pos_to_neg || neg_to_pos;
    case Kind::BallEnter:
      return pos_to_neg;
    case Kind::BallExit:
      return neg_to_pos;
  }
  return false;
}

namespace {

struct UnitField {
  const DirectionField& f;

  // nullopt: the point is singular (speed below tolerance)
  std::optional<Vec2> operator()(Vec2 p) const {
    const Vec2 v = f.eval(p);
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
      throw IntegrateError(IntegrateError::Code::NonFiniteField,
                           "field is non-finite at (" + std::to_string(p.x) +
                               ", " + std::to_string(p.y) + ")");
    const double speed = v.norm();
    if (speed < f.singular_tolerance) return std::nullopt;
    return Vec2{v.x / speed, v.y / speed};
  }
};

std::optional<Vec2> rk4_step(const UnitField& u, Vec2 p, double h) {
  const auto k1 = u(p);
  if (!k1) return std::nullopt;
  const auto k2 = u(p + (h / 2) * *k1);
  if (!k2) return std::nullopt;
  const auto k3 = u(p + (h / 2) * *k2);
  if (!k3) return std::nullopt;
  const auto k4 = u(p + h * *k3);
  if (!k4) return std::nullopt;
  return p + (h / 6) * (*k1 + 2 * (*k2 + *k3) + *k4);
}

}  // namespace

Trajectory integrate_orbit(const DirectionField& field, Vec2 start,
                           const IntegrateOptions& opts,
                           const std::vector<EventSpec>& events) {
  const UnitField u{field};
  Trajectory traj;
  traj.vertices.push_back(start);

  std::vector<double> ev(events.size());
  for (std::size_t i = 0; i < events.size(); ++i)
    ev[i] = events[i].value(start);

  Vec2 p = start;
  double t_nominal = 0;  // arc-length parameter; the final step is trimmed
  while (t_nominal < opts.budget) {
    const double h = std::min(opts.step, opts.budget - t_nominal);
    const auto next = rk4_step(u, p, h);
    if (!next) {
      traj.termination = Termination::SingularReached;
      return traj;
    }

    int hit = -1;
    double hit_theta = 2;
    Vec2 hit_point{};
    for (std::size_t i = 0; i < events.size(); ++i) {
      const double after = events[i].value(*next);
      if (!events[i].triggers(ev[i], after)) continue;
      // Bisect the step fraction; the bracket keeps a sign change.
      double lo = 0, hi = 1;
      Vec2 q = *next;
      double v_lo = ev[i];
      while ((hi - lo) * h > opts.step * 1e-6) {
        const double mid = (lo + hi) / 2;
        const auto pm = rk4_step(u, p, h * mid);
        if (!pm) break;
        const double vm = events[i].value(*pm);
        if (events[i].triggers(v_lo, vm)) {
          hi = mid;
          q = *pm;
        } else {
          lo = mid;
          v_lo = vm;
        }
      }
      if (hi < hit_theta) {
        hit_theta = hi;
        hit = static_cast<int>(i);
        hit_point = q;
      }
    }
    if (hit >= 0) {
      traj.arc_length += (hit_point - p).norm();
      traj.vertices.push_back(hit_point);
      traj.termination = Termination::EventHit;
      traj.event_index = hit;
      return traj;
    }

    traj.arc_length += (*next - p).norm();
    t_nominal += h;
    p = *next;
    traj.vertices.push_back(p);
    for (std::size_t i = 0; i < events.size(); ++i)
      ev[i] = events[i].value(p);

    if (std::abs(p.x) > opts.domain_halfwidth ||
        std::abs(p.y) > opts.domain_halfwidth) {
      traj.termination = Termination::LeftDomain;
      return traj;
    }
  }
  traj.termination = Termination::BudgetExhausted;
  return traj;
}

std::optional<Vec2> detect_crossing(const DirectionField& field, Vec2 start,
                                    const EventSpec& line, double step,
                                    double budget) {
  IntegrateOptions opts;
  opts.step = step;
  opts.budget = budget;
  const Trajectory traj = integrate_orbit(field, start, opts, {line});
  if (traj.termination != Termination::EventHit) return std::nullopt;
  return traj.vertices.back();
}

}  // namespace attractor
