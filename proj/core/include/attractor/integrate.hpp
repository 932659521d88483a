#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "attractor/vec2.hpp"

namespace attractor {

struct IntegrateError : std::runtime_error {
  enum class Code { NonFiniteField, NoCrossing };

  IntegrateError(Code c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}

  Code code;
};

// Velocity field plus the un-normalized speed below which a point counts as
// singular. Orbits are traced on the unit-normalized field (arc-length
// parameterization), which preserves them while keeping uniform progress
// near high-order singular points.
struct DirectionField {
  std::function<Vec2(Vec2)> eval;
  double singular_tolerance = 1e-12;
};

struct EventSpec {
  enum class Kind { LineCross, BallEnter, BallExit };

  Kind kind = Kind::LineCross;
  // LineCross: a x + b y + c = 0; direction -1 triggers on + -> -,
  // +1 on - -> +, 0 on any sign change.
  double a = 0, b = 0, c = 0;
  int direction = 0;
  Vec2 center{};
  double radius = 0;

  static EventSpec line_cross(double a, double b, double c, int direction) {
    EventSpec e;
    e.kind = Kind::LineCross;
    e.a = a;
    e.b = b;
    e.c = c;
    e.direction = direction;
    return e;
  }
  static EventSpec ball_enter(Vec2 center, double radius) {
    EventSpec e;
    e.kind = Kind::BallEnter;
    e.center = center;
    e.radius = radius;
    return e;
  }
  static EventSpec ball_exit(Vec2 center, double radius) {
    EventSpec e;
    e.kind = Kind::BallExit;
    e.center = center;
    e.radius = radius;
    return e;
  }

  double value(Vec2 p) const;
  bool triggers(double before, double after) const;
};

struct IntegrateOptions {
  double step = 1e-3;    // arc length per step
  double budget = 1e4;   // total arc length
  double domain_halfwidth = std::numeric_limits<double>::infinity();
};

enum class Termination { SingularReached, BudgetExhausted, EventHit,
                         LeftDomain };

struct Trajectory {
  std::vector<Vec2> vertices;
  double arc_length = 0;
  Termination termination = Termination::BudgetExhausted;
  int event_index = -1;  // valid when termination == EventHit
};

// Classical fixed-step RK4 on the normalized field; events are localized by
// bisection to within step * 1e-6 of arc length. Deterministic.
Trajectory integrate_orbit(const DirectionField& field, Vec2 start,
                           const IntegrateOptions& opts,
                           const std::vector<EventSpec>& events = {});

// First crossing point of a LineCross event, or nullopt if the budget runs
// out first.
std::optional<Vec2> detect_crossing(const DirectionField& field, Vec2 start,
                                    const EventSpec& line, double step,
                                    double budget);

}  // namespace attractor
