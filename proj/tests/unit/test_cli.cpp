#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "prolate/cli/commands.hpp"
#include "prolate/cli/config.hpp"

using namespace prolate;
using namespace prolate::cli;

namespace {

std::string config(const char* name) { return std::string(PROLATE_CONFIGS) + "/" + name; }

CommandResult run_text(const std::string& command, const std::string& yaml, const Overrides& o = {}) {
  try {
    JobConfig job = parse_config(yaml, PROLATE_CONFIGS);
    apply(job, o);
    if (command == "verify") return cmd_verify(job);
    if (command == "dims") return cmd_dims(job);
    if (command == "solve") return cmd_solve(job);
    return cmd_eval(job);
  } catch (const Error& e) {
    return {exit_code_for(e.code()), "", e.what()};
  }
}

/// Pulls "key: value" from a flat report; empty when absent.
std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    const auto p = line.find(key + ": ");
    if (p != std::string::npos && line.find_first_not_of(' ') == p) return line.substr(p + key.size() + 2);
  }
  return "";
}

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run("verify", config("ladder_verify.yaml"), {}).exit_code == 0);

  const CommandResult bad = run("verify", config("corrupted_g.yaml"), {});
  CHECK(bad.exit_code == 2);
  CHECK(bad.diagnostics.find("FactorizationFails") != std::string::npos);
  CHECK(bad.report.find("residual: \"") != std::string::npos);
  CHECK(field(bad.report, "residual") != "\"0\"");

  const CommandResult parse = run("verify", config("malformed.yaml"), {});
  CHECK(parse.exit_code == 1);
  CHECK(parse.diagnostics.find("offset") != std::string::npos);

  CHECK(run("verify", config("missing.yaml"), {}).exit_code == 1);
  CHECK(run("bogus", config("ladder_verify.yaml"), {}).exit_code == 1);
}

TEST_CASE("config is strict") {
  CHECK(run_text("verify", "identity: airy\nextra: 1\n").exit_code == 1);
  CHECK(run_text("verify", "identity: airy\nladder: {nu: \"0\"}\n").exit_code == 1);
  CHECK(run_text("verify", "identity: \"bessel:x\"\n").exit_code == 1);
  CHECK(run_text("verify", "kernel: {kind: single}\n").exit_code == 1);
  CHECK(run_text("verify", "identity: airy\nkernel: {kind: nope}\n").exit_code == 1);
  CHECK(run_text("verify", "identity: airy\n").exit_code == 0);
  CHECK(run_text("verify", "seeds: {family: airy, list: [{lambda: \"1\", q: \"1\"}]}\n").exit_code == 0);
}

TEST_CASE("overrides") {
  JobConfig job = load_config(config("prolate.yaml"));
  CHECK(job.search.minimal);
  CHECK(job.kernel.grid.points == 200);
  Overrides o;
  o.l1 = 2;
  o.l2 = 3;
  o.grid = 50;
  o.tol = 1e-3;
  apply(job, o);
  CHECK_FALSE(job.search.minimal);
  CHECK(job.search.l1 == 2);
  CHECK(job.search.l2 == 3);
  CHECK(job.kernel.grid.points == 50);
  CHECK(job.residual_tolerance == 1e-3);
  o = {};
  o.minimal = true;
  apply(job, o);
  CHECK(job.search.minimal);
}

TEST_CASE("dims tables") {
  // identity Airy data: S1 = S2 = all operators of bidegree (l1, l2), no constraints
  const CommandResult r = run_text("dims", "identity: airy\ndims: {max_l: 3}\n");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.report);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    int l1, l2, s1, s2;
    if (std::sscanf(line.c_str(), "    - [%d, %d, %d, %d", &l1, &l2, &s1, &s2) != 4) continue;
    CHECK(s1 == (l1 + 1) * (l2 + 1));
    CHECK(s2 == (l1 + 1) * (l2 + 1));
    ++rows;
  }
  CHECK(rows == 16);

  // ladder of depth 2: nothing fits below l = rho on the x side
  const CommandResult lad = run("dims", config("ladder_verify.yaml"), {});
  REQUIRE(lad.exit_code == 0);
  CHECK(lad.report.find("    - [0, 0, 0, 0, 0, 0,") != std::string::npos);
  CHECK(lad.report.find("    - [1, 1, 0, 0, 0, 0,") != std::string::npos);
  CHECK(field(lad.report, "all_pass") == "true");
}

TEST_CASE("solve on the prolate config") {
  const CommandResult r = run("solve", config("prolate.yaml"), {});
  CHECK(r.exit_code == 0);
  CHECK(field(r.report, "order") == "2");
  CHECK(field(r.report, "certified") == "true");
  CHECK(std::stod(field(r.report, "max_residual")) <= 1e-8);

  // determinism: identical config gives identical bytes
  CHECK(run("solve", config("prolate.yaml"), {}).report == r.report);

  // an impossible tolerance is reported, not hidden
  Overrides o;
  o.tol = 1e-30;
  const CommandResult strict = run("solve", config("prolate.yaml"), o);
  CHECK(strict.exit_code == 4);
  CHECK(field(strict.report, "certified") == "false");
}

TEST_CASE("solve on the airy config") {
  const CommandResult r = run("solve", config("airy.yaml"), {});
  CHECK(r.exit_code == 0);
  CHECK(field(r.report, "order") == "2");
  CHECK(std::stod(field(r.report, "max_residual")) <= 1e-6);
}

TEST_CASE("solve failure paths") {
  CHECK(run("solve", config("pole_on_contour.yaml"), {}).exit_code == 1);
  CHECK(run("solve", config("pole_on_contour.yaml"), {}).diagnostics.find("PoleOnContour") != std::string::npos);
  // contours are required
  CHECK(run_text("solve", "identity: airy\n").exit_code == 1);
  // a fixed bidegree below the ladder depth has no nonconstant solution
  Overrides o;
  o.l1 = 1;
  o.l2 = 1;
  CHECK(run("solve", config("ladder.yaml"), o).exit_code == 3);
}

TEST_CASE("solve writes its files") {
  const auto dir = std::filesystem::temp_directory_path() / "prolate_cli_test";
  std::filesystem::remove_all(dir);
  Overrides o;
  o.out = dir.string();
  o.grid = 40;
  REQUIRE(run("solve", config("prolate.yaml"), o).exit_code == 0);
  for (const char* f : {"solution.yaml", "commutator.yaml", "kernel.csv", "residuals.csv"})
    CHECK(std::filesystem::exists(dir / f));
  std::ifstream csv(dir / "kernel.csv");
  int lines = 0;
  for (std::string l; std::getline(csv, l);) ++lines;
  CHECK(lines >= 40);
  std::filesystem::remove_all(dir);
}

TEST_CASE("eval prints psi at the points") {
  const CommandResult r = run_text("eval", "identity: airy\npoints:\n  - [0.5, 0, 1, 0]\n");
  REQUIRE(r.exit_code == 0);
  const auto row = r.report.substr(r.report.find('\n') + 1);
  double xr, xi, zr, zi, pr, pi;
  REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &xr, &xi, &zr, &zi, &pr, &pi) == 6);
  // Ai(3/2)
  CHECK(pr == doctest::Approx(0.07174949700810541).epsilon(1e-13));
  CHECK(pi == 0.0);
}
