// Command-line front end: validate feasible sets, extract canonical
// invariants from configurations, decide equivalence, synthesize
// configurations and portraits, and run the explicit-example checks.
//
// Exit codes: 0 success (equiv: equivalent), 1 not equivalent / checks
// failed, 2 invalid input or usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "attractor/canonical.hpp"
#include "attractor/configuration.hpp"
#include "attractor/example_system.hpp"
#include "attractor/feasible_json.hpp"
#include "attractor/portrait.hpp"
#include "attractor/synthesis.hpp"

namespace {

using namespace attractor;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Orientation parse_orientation(const std::string& s) {
  if (s == "ccw") return Orientation::CCW;
  if (s == "cw") return Orientation::CW;
  throw std::runtime_error("orientation must be \"ccw\" or \"cw\"");
}

void print_tap(const Report& report, std::ostream& os) {
  os << "1.." << report.checks.size() << "\n";
  int k = 0;
  for (const auto& c : report.checks) {
    os << (c.ok ? "ok " : "not ok ") << ++k << " - " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"classification and synthesis of planar flows with a "
               "globally attracting equilibrium"};
  app.require_subcommand(1);

  std::string feasible_path, config_path, a_path, b_path, out_path;
  std::string svg_path, csv_path, json_path, sigma_id, orientation = "ccw";
  double ymax = 3, step = 1e-3, max_arc = 40;
  int samples = 2, points = 60;
  double from = 1e-3, to = 10;
  bool witness = false, verify_all = false;

  auto* validate =
      app.add_subcommand("validate", "validate a feasible-set file");
  validate->add_option("--feasible", feasible_path)->required();

  auto* canonical = app.add_subcommand(
      "canonical", "canonical feasible set of a configuration");
  canonical->add_option("--config", config_path)->required();
  canonical->add_option("--orientation", orientation)
      ->check(CLI::IsMember({"ccw", "cw"}));
  canonical->add_option("--sigma", sigma_id)->required();

  auto* equiv =
      app.add_subcommand("equiv", "decide topological equivalence");
  equiv->add_option("--a", a_path)->required();
  equiv->add_option("--b", b_path)->required();
  equiv->add_flag("--witness", witness);

  auto* synth = app.add_subcommand(
      "synth", "configuration of the flow constructed from a feasible set");
  synth->add_option("--feasible", feasible_path)->required();
  synth->add_option("--out", out_path);

  auto* portrait =
      app.add_subcommand("portrait", "render a phase portrait");
  portrait->add_option("--feasible", feasible_path)->required();
  portrait->add_option("--svg", svg_path)->required();
  portrait->add_option("--csv", csv_path);
  portrait->add_option("--json", json_path);
  portrait->add_option("--ymax", ymax);
  portrait->add_option("--step", step);
  portrait->add_option("--max-arc", max_arc);
  portrait->add_option("--samples", samples);

  auto* example = app.add_subcommand("example", "explicit example system");
  example->require_subcommand(1);
  auto* verify = example->add_subcommand("verify", "run the checks");
  verify->add_flag("--all", verify_all);
  auto* ymap = example->add_subcommand("y-map", "crossing map table");
  ymap->add_option("--from", from);
  ymap->add_option("--to", to);
  ymap->add_option("--points", points);
  ymap->add_option("--csv", csv_path);
  ymap->add_option("--step", step);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    const FeasibleSet L = feasible_from_json_text(read_file(feasible_path));
    std::cout << feasible_to_json_text(L);
    return 0;
  }

  if (canonical->parsed()) {
    const Configuration cfg = config_from_json_text(read_file(config_path));
    const FeasibleSet L =
        canonical_feasible_set(cfg, parse_orientation(orientation), sigma_id);
    std::cout << feasible_to_json_text(L);
    return 0;
  }

  if (equiv->parsed()) {
    const Configuration a = config_from_json_text(read_file(a_path));
    const Configuration b = config_from_json_text(read_file(b_path));
    const EquivalenceResult res = decide_equivalence(a, b);
    if (witness && res.witness) {
      nlohmann::json j;
      j["theta1"] = orientation_name(res.witness->theta1);
      j["sigma1"] = res.witness->sigma1;
      j["theta2"] = orientation_name(res.witness->theta2);
      j["sigma2"] = res.witness->sigma2;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (res.equivalent ? "equivalent" : "not equivalent") << "\n";
    }
    return res.equivalent ? 0 : 1;
  }

  if (synth->parsed()) {
    const FeasibleSet L = feasible_from_json_text(read_file(feasible_path));
    const Configuration cfg = synthesize_configuration(L);
    const std::string text = config_to_json_text(cfg);
    if (out_path.empty())
      std::cout << text;
    else
      write_file(out_path, text);
    return 0;
  }

  if (portrait->parsed()) {
    const FeasibleSet L = feasible_from_json_text(read_file(feasible_path));
    PortraitOptions opts;
    opts.ymax = ymax;
    opts.step = step;
    opts.max_arc = max_arc;
    opts.samples_per_block = samples;
    const PortraitDoc doc = render_portrait(L, opts);
    write_file(svg_path, doc.to_svg());
    if (!csv_path.empty()) write_file(csv_path, doc.to_csv());
    if (!json_path.empty()) write_file(json_path, doc.metadata_json);
    return 0;
  }

  if (verify->parsed()) {
    (void)verify_all;
    Report all;
    {
      const auto samples100 = halton_points(100, -5, 5);
      Report r = verify_global_attraction(samples100, 0.05);
      int failed = 0;
      double max_arc_seen = 0;
      for (const auto& c : r.checks) {
        if (!c.ok) ++failed;
      }
      all.checks.push_back(
          {"global attraction: 100 quasi-random samples in [-5,5]^2 reach "
           "the 0.05-ball",
           failed == 0, failed ? std::to_string(failed) + " failed" : ""});
      (void)max_arc_seen;
    }
    {
      CheckLine line;
      line.name = "crossing map: Y(y0) > 1/4 on a 60-point log grid, "
                  "minimum in [0.80, 0.86]";
      double min_y = 1e9;
      bool above = true;
      for (int k = 0; k < 60; ++k) {
        const double y0 =
            1e-3 * std::pow(10.0 / 1e-3, static_cast<double>(k) / 59);
        const double Y = crossing_map_Y(y0);
        min_y = std::min(min_y, Y);
        if (Y <= 0.25) above = false;
      }
      line.ok = above && 0.80 <= min_y && min_y <= 0.86;
      line.detail = "min Y = " + std::to_string(min_y);
      all.checks.push_back(std::move(line));
    }
    {
      const DirectionField f = example_field();
      IntegrateOptions io;
      io.step = 1e-3;
      io.budget = 1e4;
      const Trajectory traj = integrate_orbit(
          f, {0, 1e-4}, io,
          {EventSpec::ball_exit({0, 0}, 0.25),
           EventSpec::ball_enter({0, 0}, 0.05)});
      all.checks.push_back(
          {"instability: the orbit from (0, 1e-4) leaves the 0.25-ball "
           "before entering the 0.05-ball",
           traj.termination == Termination::EventHit && traj.event_index == 0,
           "arc length " + std::to_string(traj.arc_length)});
    }
    {
      Report r = check_inequalities(200);
      for (auto& c : r.checks) all.checks.push_back(std::move(c));
    }
    {
      Report r = verify_elliptic_saddle();
      for (auto& c : r.checks) all.checks.push_back(std::move(c));
    }
    print_tap(all, std::cout);
    return all.pass() ? 0 : 1;
  }

  if (ymap->parsed()) {
    ExampleOptions opts;
    opts.step = step;
    std::string out = "y0,Y\n";
    double min_y = 1e300;
    for (int k = 0; k < points; ++k) {
      const double y0 =
          points == 1
              ? from
              : from * std::pow(to / from, static_cast<double>(k) / (points - 1));
      const double Y = crossing_map_Y(y0, opts);
      min_y = std::min(min_y, Y);
      out += format_double17(y0) + "," + format_double17(Y) + "\n";
    }
    if (csv_path.empty())
      std::cout << out;
    else
      write_file(csv_path, out);
    std::cerr << "min Y = " << min_y << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
