// End-to-end tests for the command-line tool: exit codes are a stable
// contract, outputs must round-trip through the library parsers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "attractor/canonical.hpp"
#include "attractor/configuration.hpp"
#include "attractor/feasible_json.hpp"

using namespace attractor;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                               "/attractor_cli_out.txt";
  const std::string cmd =
      std::string(ATTRACTOR_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  return r;
}

const std::string kFix = FIXTURE_DIR;

std::string tmp_path(const std::string& name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
         "/" + name;
}

}  // namespace

TEST_CASE("validate: exit 0 on a valid set, 2 otherwise") {
  CHECK(run("validate --feasible " + kFix + "/elliptic_saddle.json")
            .exit_code == 0);
  CHECK(run("validate --feasible " + kFix + "/table1.json").exit_code == 0);
  CHECK(run("validate --feasible " + kFix + "/table2.json").exit_code == 2);
  CHECK(run("validate --feasible " + kFix + "/missing.json").exit_code == 2);
  CHECK(run("validate").exit_code != 0);
}

TEST_CASE("synth then canonical round-trips through files") {
  const std::string cfg_path = tmp_path("round_trip_config.json");
  const RunResult synth = run("synth --feasible " + kFix +
                              "/table3.json --out " + cfg_path);
  REQUIRE(synth.exit_code == 0);

  const RunResult canon = run("canonical --config " + cfg_path +
                              " --orientation ccw --sigma sep:4");
  REQUIRE(canon.exit_code == 0);
  const FeasibleSet back = feasible_from_json_text(canon.out);
  const FeasibleSet original =
      feasible_from_json_text(slurp(kFix + "/table3.json"));
  CHECK(back == original);

  CHECK(run("canonical --config " + kFix +
            "/missing.json --orientation ccw --sigma sep:1")
            .exit_code == 2);
}

TEST_CASE("equiv exit codes: 0 equivalent, 1 not, 2 invalid") {
  const std::string a = tmp_path("equiv_a.json");
  const std::string b = tmp_path("equiv_b.json");
  REQUIRE(run("synth --feasible " + kFix + "/table1.json --out " + a)
              .exit_code == 0);
  REQUIRE(run("synth --feasible " + kFix + "/table3.json --out " + b)
              .exit_code == 0);

  CHECK(run("equiv --a " + a + " --b " + a).exit_code == 0);
  CHECK(run("equiv --a " + a + " --b " + b).exit_code == 1);
  CHECK(run("equiv --a " + a + " --b " + kFix + "/missing.json").exit_code ==
        2);

  const RunResult w = run("equiv --a " + a + " --b " + a + " --witness");
  CHECK(w.exit_code == 0);
  CHECK(w.out.find("sigma1") != std::string::npos);
}

TEST_CASE("extraction failure on a non-realizable configuration is exit 2") {
  CHECK(run("canonical --config " + kFix +
            "/two_loops_three_sectors.json --orientation ccw --sigma S_top")
            .exit_code == 2);
}

TEST_CASE("portrait writes deterministic svg and csv") {
  const std::string svg1 = tmp_path("portrait1.svg");
  const std::string svg2 = tmp_path("portrait2.svg");
  const std::string csv1 = tmp_path("portrait1.csv");
  const std::string csv2 = tmp_path("portrait2.csv");
  const std::string base_args = "portrait --feasible " + kFix +
                                "/elliptic_saddle.json --step 5e-3 "
                                "--max-arc 6 --samples 1";
  REQUIRE(run(base_args + " --svg " + svg1 + " --csv " + csv1).exit_code == 0);
  REQUIRE(run(base_args + " --svg " + svg2 + " --csv " + csv2).exit_code == 0);
  const std::string svg = slurp(svg1);
  CHECK(svg == slurp(svg2));
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("separatrix") != std::string::npos);
  CHECK(slurp(csv1).rfind("orbit,index,x,y", 0) == 0);
}

TEST_CASE("example y-map emits the requested number of rows") {
  const std::string csv = tmp_path("ymap.csv");
  const RunResult r = run("example y-map --from 0.5 --to 2 --points 3 "
                          "--step 5e-3 --csv " + csv);
  REQUIRE(r.exit_code == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("y0,Y", 0) == 0);
  int rows = 0;
  for (char c : text)
    if (c == '\n') ++rows;
  CHECK(rows == 4);  // header + 3 samples
}

TEST_CASE("unknown flags are rejected") {
  CHECK(run("validate --feasible x --bogus").exit_code != 0);
  CHECK(run("nonsense").exit_code != 0);
}
