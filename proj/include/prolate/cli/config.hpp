#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prolate/commute/solve.hpp"
#include "prolate/numverify/kernel.hpp"

namespace prolate::cli {

/// A job read from a YAML config. The datum comes from exactly one of
///   data: <path> | {inline datum}
///   ladder: {nu: "1/2", steps: 2}
///   identity: airy | "bessel:p/q"
///   seeds: {family: ..., list: [{alpha: "a", q: "poly"} | {lambda: "l", q: "poly"}]}
struct JobConfig {
  std::string source;
  darboux::DarbouxData data;
  std::optional<commute::ContourSpec> gamma1;
  std::optional<commute::ContourSpec> gamma2;
  commute::Search search;
  /// Largest l for the dims table (rows 0..max_l on both sides).
  int max_l = 5;
  numverify::KernelSetup kernel;
  int tests = 20;
  double residual_tolerance = 1e-8;
  std::vector<std::pair<std::complex<double>, std::complex<double>>> points;
  /// Output directory; nothing is written when empty.
  std::string out_dir;
};

/// Paths inside the config are relative to base_dir. Throws Config/Parse.
JobConfig parse_config(const std::string& yaml, const std::string& base_dir = ".");
JobConfig load_config(const std::string& path);

struct Overrides {
  std::optional<int> l1;
  std::optional<int> l2;
  bool minimal = false;
  std::optional<double> tol;
  std::optional<int> grid;
  std::optional<std::string> out;
};

/// --l1/--l2 select a fixed search, --minimal forces the minimal search.
void apply(JobConfig& job, const Overrides& o);

}  // namespace prolate::cli
