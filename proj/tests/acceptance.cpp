// Acceptance suite: one runnable criterion per number, TAP-style output.
// Run all criteria with no arguments or a single one with --criterion N.
// Exit code 0 iff every executed criterion passes.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "attractor/canonical.hpp"
#include "attractor/example_system.hpp"
#include "attractor/feasible_json.hpp"
#include "attractor/generate.hpp"
#include "attractor/parallel.hpp"
#include "attractor/synthesis.hpp"

using namespace attractor;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(FIXTURE_DIR) + "/" + name);
}

std::vector<Element> record(
    std::initializer_list<std::pair<VecKey, int>> items) {
  std::vector<Element> out;
  for (const auto& [k, n] : items) out.push_back({k, Third::of_thirds(n)});
  std::sort(out.begin(), out.end(), ElementLess{});
  return out;
}

// ---------------------------------------------------------------- 1 ----

Outcome criterion_fixtures() {
  Outcome res;
  res.ok = true;

  const auto expect_table1 =
      record({{{1}, 6}, {{1}, 5},
              {{1, 1}, 0}, {{1, 1}, 6}, {{1, 1}, 1}, {{1, 1}, 2},
              {{1, 1, 1}, 0}, {{1, 1, 1}, 3}, {{1, 1, 1}, 1},
              {{1, 1, 1}, 2}});
  const auto expect_table2 =
      record({{{1}, 6}, {{1}, 2},
              {{1, 1}, 0}, {{1, 1}, 3}, {{1, 1}, 1}, {{1, 1}, 2},
              {{2}, 3}, {{2}, 2},
              {{3}, 6}, {{3}, 5},
              {{3, 1}, 0}, {{3, 1}, 3}, {{3, 1}, 1}, {{3, 1}, 2}});
  const auto expect_table3 =
      record({{{1}, 5}, {{1}, 12},
              {{1, 1}, 0}, {{1, 1}, 1}, {{1, 1}, 2}, {{1, 1}, 3},
              {{1, 2}, 0}, {{1, 2}, 1}, {{1, 2}, 2}, {{1, 2}, 3},
              {{1, 3}, 0}, {{1, 3}, 1}, {{1, 3}, 2}, {{1, 3}, 3},
              {{2}, 2}, {{2}, 6},
              {{2, 1}, 0}, {{2, 1}, 1}, {{2, 1}, 8}, {{2, 1}, 9},
              {{2, 1, 1}, 0}, {{2, 1, 1}, 1}, {{2, 1, 1}, 2}, {{2, 1, 1}, 3},
              {{2, 1, 2}, 0}, {{2, 1, 2}, 1}, {{2, 1, 2}, 2}, {{2, 1, 2}, 3},
              {{3}, 2}, {{3}, 3},
              {{4}, 5}, {{4}, 6},
              {{4, 1}, 0}, {{4, 1}, 4}, {{4, 1}, 5}, {{4, 1}, 9},
              {{4, 1, 1}, 0}, {{4, 1, 1}, 1}, {{4, 1, 1}, 2}, {{4, 1, 1}, 3},
              {{4, 1, 2}, 0}, {{4, 1, 2}, 1}, {{4, 1, 2}, 2},
              {{4, 1, 2}, 3}});

  for (const auto& [name, expected] :
       {std::pair<const char*, const std::vector<Element>*>{"table1.json",
                                                            &expect_table1},
        {"table3.json", &expect_table3}}) {
    try {
      const FeasibleSet L = feasible_from_json_text(fixture(name));
      if (L.elements() == *expected) {
        res.notes.push_back(std::string("# ") + name +
                            " validates; element list matches the record");
      } else {
        res.ok = false;
        res.notes.push_back(std::string("# ") + name +
                            " validates but elements differ from the record");
      }
    } catch (const std::exception& e) {
      res.ok = false;
      res.notes.push_back(std::string("# ") + name +
                          " failed: " + e.what());
    }
  }

  // table2: the recorded marker data is internally inconsistent. The
  // derivation rule reproduces the recorded element list, but validation
  // must reject it: sigma(3) = lambda(3) together with sigma(1) = 0 breaks
  // the cyclic condition (iii), and no sigma assignment over the base
  // {(1),(1,1),(2),(3),(3,1)} satisfies that condition at all (see the
  // fixtures README). An extraction from a real flow can never produce it.
  try {
    feasible_from_json_text(fixture("table2.json"));
    res.ok = false;
    res.notes.push_back(
        "# table2.json unexpectedly validated; condition (iii) should "
        "reject sigma(3)=lambda(3) with sigma(1)=0");
  } catch (const FeasibleError& e) {
    res.ok = false;  // the criterion asks all three tables to validate
    const bool right_reason =
        e.code == FeasibleError::Code::ConditionIII && e.key == VecKey{3};
    res.notes.push_back(std::string("# table2.json rejected: ") + e.what());
    res.notes.push_back(
        right_reason
            ? "# rejection is at the documented inconsistency (condition "
              "(iii), sector pair (3,1)); the derived element list matches "
              "the record"
            : "# rejection happened for an unexpected reason");
    // still confirm the derivation matches the recorded elements
    const auto derived = derive_elements(
        CompleteBase::validate({{1}, {1, 1}, {2}, {3}, {3, 1}}),
        {{{1, 1}, 0}, {{3, 1}, 0}},
        {{{1}, 0}, {{1, 1}, 0}, {{2}, 0}, {{3}, 1}, {{3, 1}, 0}});
    if (derived != expect_table2)
      res.notes.push_back("# derived table2 elements differ from the record");
  }

  res.detail =
      "table1 and table3 validate with exact element lists; table2 is "
      "rejected by condition (iii) as recorded (known data erratum, no "
      "feasible sigma exists over its base)";
  return res;
}

// ---------------------------------------------------------------- 2 ----

Outcome criterion_non_equivalence() {
  Outcome res;
  const FeasibleSet t1 = feasible_from_json_text(fixture("table1.json"));
  const Configuration cfg1 = synthesize_configuration(t1);

  // The second flow's feasible set cannot be validated (criterion 1), so
  // its configuration cannot be synthesized from marker data. The
  // configuration itself is reconstructible as a cyclic word; extraction
  // then rejects it for every orientation/separatrix choice.
  const Configuration cfg2 =
      config_from_json_text(fixture("two_loops_three_sectors.json"));

  int rejected = 0, total = 0;
  for (const Orientation theta : {Orientation::CCW, Orientation::CW})
    for (const std::string& sep : het_separatrices(cfg2)) {
      ++total;
      try {
        canonical_feasible_set(cfg2, theta, sep);
      } catch (const ConfigError& e) {
        if (e.code == ConfigError::Code::NonRealizable) ++rejected;
      }
    }
  res.notes.push_back("# second configuration: " + std::to_string(rejected) +
                      "/" + std::to_string(total) +
                      " extraction choices rejected as non-realizable");

  bool threw = false;
  try {
    decide_equivalence(cfg1, cfg2);
  } catch (const ConfigError&) {
    threw = true;
  }
  res.notes.push_back(
      threw ? "# decide_equivalence propagates the extraction failure"
            : "# decide_equivalence unexpectedly returned a verdict");

  // The machinery itself separates genuinely distinct valid flows.
  const FeasibleSet t3 = feasible_from_json_text(fixture("table3.json"));
  const bool distinct =
      !decide_equivalence(cfg1, synthesize_configuration(t3)).equivalent;
  res.notes.push_back(distinct
                          ? "# control pair (table1 vs table3 flows): not "
                            "equivalent across all choices"
                          : "# control pair unexpectedly equivalent");

  res.ok = false;  // blocked by the same erratum as criterion 1
  res.detail =
      "blocked: the second flow's marker table admits no feasible set "
      "(condition (iii)), so its configuration has no canonical invariant; "
      "extraction rejects all " +
      std::to_string(total) +
      " choices and equivalence cannot be decided against it. Control "
      "check on a valid pair: " +
      std::string(distinct ? "not equivalent as expected" : "FAILED");
  return res;
}

// ---------------------------------------------------------------- 3 ----

Outcome criterion_round_trip() {
  Outcome res;
  std::mt19937_64 rng(20240817);
  int failures = 0;
  const int trials = 200;
  for (int k = 0; k < trials; ++k) {
    const FeasibleSet L = random_feasible(rng, 12);
    const Configuration cfg = synthesize_configuration(L);
    const FeasibleSet back = canonical_feasible_set(
        cfg, Orientation::CCW, sep_orbit_id({L.sector_count()}));
    if (!(back == L)) ++failures;
  }
  res.ok = failures == 0;
  res.detail = std::to_string(trials) + " random feasible sets (|base| <= "
               "12), " + std::to_string(failures) + " round-trip failures";
  return res;
}

// ---------------------------------------------------------------- 4 ----

Outcome criterion_small_uniqueness() {
  Outcome res;
  const auto sets = enumerate_feasible(4);

  auto partition_signature = [](const std::vector<std::string>& groups) {
    std::vector<int> sig(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
      sig[i] = static_cast<int>(i);
      for (std::size_t j = 0; j < i; ++j)
        if (groups[j] == groups[i]) {
          sig[i] = static_cast<int>(j);
          break;
        }
    }
    return sig;
  };

  auto length_counts = [](const FeasibleSet& L) {
    std::map<std::size_t, int> counts;
    for (const auto& [v, lam] : L.base().lambdas()) counts[v.size()]++;
    return counts;
  };

  int collisions = 0;
  for (const FeasibleSet& L : sets) {
    const Configuration word = synthesize_configuration(L);
    std::vector<std::string> word_groups;
    for (const Mark& mk : word.marks()) word_groups.push_back(mk.orbit);
    const auto word_sig = partition_signature(word_groups);
    const auto counts = length_counts(L);

    for (const FeasibleSet& other : sets) {
      if (other == L) continue;
      if (other.elements().size() != L.elements().size()) continue;
      if (length_counts(other) != counts) continue;
      // the unique order-preserving bijection maps the i-th element of
      // `other` to the i-th mark; it preserves orbits iff the key
      // partition agrees with the orbit partition
      std::vector<std::string> other_groups;
      for (const Element& e : other.elements())
        other_groups.push_back(key_str(e.key));
      if (partition_signature(other_groups) == word_sig) ++collisions;
    }
  }
  res.ok = collisions == 0;
  res.detail = std::to_string(sets.size()) +
               " feasible sets with |base| <= 4 enumerated; " +
               std::to_string(collisions) +
               " order/orbit-preserving collisions between distinct sets";
  return res;
}

// ---------------------------------------------------------------- 5 ----

Outcome criterion_crossing_bound() {
  Outcome res;
  const int points = 60;
  std::vector<double> values(points);
  std::vector<int> idx(points);
  for (int k = 0; k < points; ++k) idx[k] = k;
  parallel_for(points, [&](std::size_t k) {
    const double y0 =
        1e-3 * std::pow(10.0 / 1e-3, static_cast<double>(k) / (points - 1));
    values[k] = crossing_map_Y(y0);
  });
  double min_y = 1e300;
  bool all_above = true;
  for (double v : values) {
    min_y = std::min(min_y, v);
    if (v <= 0.25) all_above = false;
  }
  res.ok = all_above && 0.80 <= min_y && min_y <= 0.86;
  std::ostringstream ss;
  ss << "Y(y0) > 1/4 on all " << points
     << " log-spaced samples in [1e-3, 10]: " << (all_above ? "yes" : "NO")
     << "; min Y = " << min_y << " (window [0.80, 0.86])";
  res.detail = ss.str();
  return res;
}

// ---------------------------------------------------------------- 6 ----

Outcome criterion_global_attraction() {
  Outcome res;
  const auto samples = halton_points(100, -5, 5);
  const Report report = verify_global_attraction(samples, 0.05);
  int failed = 0;
  for (const auto& c : report.checks)
    if (!c.ok) {
      ++failed;
      res.notes.push_back("# failed: " + c.name);
    }
  res.ok = failed == 0;
  res.detail = "100 quasi-random starts in [-5,5]^2, " +
               std::to_string(failed) +
               " failed to reach the 0.05-ball within arc budget 1e4";
  return res;
}

// ---------------------------------------------------------------- 7 ----

Outcome criterion_instability() {
  Outcome res;
  const DirectionField f = example_field();
  IntegrateOptions io;
  io.step = 1e-3;
  io.budget = 1e4;
  const Trajectory traj = integrate_orbit(
      f, {0, 1e-4}, io,
      {EventSpec::ball_exit({0, 0}, 0.25),
       EventSpec::ball_enter({0, 0}, 0.05)});
  res.ok =
      traj.termination == Termination::EventHit && traj.event_index == 0;
  std::ostringstream ss;
  ss << "orbit from (0, 1e-4) "
     << (res.ok ? "leaves the 0.25-ball before entering the 0.05-ball"
                : "did not leave the 0.25-ball first")
     << "; arc length " << traj.arc_length;
  res.detail = ss.str();
  return res;
}

// ---------------------------------------------------------------- 8 ----

Outcome criterion_inequalities() {
  Outcome res;
  const Report report = check_inequalities(200);
  res.ok = report.pass();
  int bad = 0;
  for (const auto& c : report.checks) {
    res.notes.push_back(std::string("# ") + (c.ok ? "ok: " : "VIOLATED: ") +
                        c.name + " (" + c.detail + ")");
    if (!c.ok) ++bad;
  }
  res.detail = std::to_string(report.checks.size()) +
               " bound families on 200x200 grids, " + std::to_string(bad) +
               " violated";
  return res;
}

// ---------------------------------------------------------------- 9 ----

Outcome criterion_integrator_order() {
  Outcome res;
  DirectionField circular;
  circular.eval = [](Vec2 p) { return Vec2{-p.y, p.x}; };
  DirectionField radial;
  radial.eval = [](Vec2 p) { return Vec2{-p.x, -p.y}; };

  // On the radial oracle the normalized field is constant along the ray, so
  // the one-step method is exact and no order can be measured there; the
  // order check runs on the circular oracle instead, the radial oracle
  // checks exactness.
  const double arc = 2.0;
  const Vec2 expect{std::cos(arc), std::sin(arc)};
  auto err = [&](double step) {
    IntegrateOptions io;
    io.step = step;
    io.budget = arc;
    return (integrate_orbit(circular, {1, 0}, io).vertices.back() - expect)
        .norm();
  };
  const double e1 = err(0.1), e2 = err(0.05), e3 = err(0.025);

  IntegrateOptions io;
  io.step = 0.1;
  io.budget = 0.5;
  const double radial_err =
      std::abs(integrate_orbit(radial, {1, 0}, io).vertices.back().x - 0.5);

  res.ok = e1 / e2 >= 8 && e2 / e3 >= 8 && radial_err < 1e-12;
  std::ostringstream ss;
  ss << "halving ratios " << e1 / e2 << ", " << e2 / e3
     << " (required >= 8); radial straight-line error " << radial_err;
  res.detail = ss.str();
  return res;
}

// --------------------------------------------------------------- 10 ----

Outcome criterion_field_invariants() {
  Outcome res;
  std::mt19937_64 rng(7070);
  int tiling_bad = 0, line_bad = 0, dir_bad = 0;
  const int sets = 50;
  for (int trial = 0; trial < sets; ++trial) {
    const FeasibleSet L = random_feasible(rng, 12);
    const StripField field = build_block_layout(L);
    const BlockLayout& lay = field.layout;

    for (std::size_t band = 1; band < lay.bands.size(); ++band) {
      double cursor = 0;
      for (std::size_t bi : lay.bands[band]) {
        const BlockSpec& b = lay.blocks[bi];
        if (b.x_lo != cursor || !(b.x_lo < b.x_hi)) ++tiling_bad;
        cursor = b.x_hi;
      }
      if (cursor != static_cast<double>(lay.t)) ++tiling_bad;
    }

    for (const auto& [v, line] : lay.orbit_lines) {
      if (line.vertical) {
        for (int k = 0; k < 1000; ++k)
          if (eval_strip_field(field, {line.x, 0.003 * (k + 1)}).x != 0.0)
            ++line_bad;
      } else {
        for (int k = 0; k < 1000; ++k) {
          const double x =
              line.x_lo + (line.x_hi - line.x_lo) * (k + 0.5) / 1000;
          if (eval_strip_field(field, {x, line.y}).y != 0.0) ++line_bad;
        }
        const Vec2 mid = eval_strip_field(
            field, {(line.x_lo + line.x_hi) / 2, line.y});
        if ((mid.x > 0) != lay.rightward.at(v) || mid.x == 0) ++dir_bad;
      }
    }
  }
  res.ok = tiling_bad == 0 && line_bad == 0 && dir_bad == 0;
  res.detail = std::to_string(sets) + " random sets: " +
               std::to_string(tiling_bad) + " tiling defects, " +
               std::to_string(line_bad) + " orbit-line invariance defects, " +
               std::to_string(dir_bad) + " gap-direction sign defects";
  return res;
}

struct Criterion {
  int number;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "fixture tables validate with exact element lists",
     criterion_fixtures},
    {2, "the two reference flows are not equivalent", criterion_non_equivalence},
    {3, "synthesis/extraction round trip on 200 random sets",
     criterion_round_trip},
    {4, "no distinct feasible set matches a synthesized word (|base| <= 4)",
     criterion_small_uniqueness},
    {5, "crossing map bound and its measured minimum",
     criterion_crossing_bound},
    {6, "global attraction from 100 quasi-random starts",
     criterion_global_attraction},
    {7, "instability witness from (0, 1e-4)", criterion_instability},
    {8, "closed-form bound grids", criterion_inequalities},
    {9, "integrator convergence order", criterion_integrator_order},
    {10, "strip-field tiling, invariant lines, gap directions",
     criterion_field_invariants},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc)
      only = std::atoi(argv[k + 1]);

  int failures = 0, ran = 0;
  std::cout << "1.." << (only ? 1 : static_cast<int>(std::size(kCriteria)))
            << "\n";
  for (const Criterion& c : kCriteria) {
    if (only && c.number != only) continue;
    ++ran;
    Outcome res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("exception: ") + e.what();
    }
    std::cout << (res.ok ? "ok " : "not ok ") << c.number << " - " << c.name
              << " (" << res.detail << ")\n";
    for (const auto& note : res.notes) std::cout << note << "\n";
    if (!res.ok) ++failures;
  }
  if (!ran) {
    std::cerr << "unknown criterion\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
