#include "prolate/cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "prolate/darboux/construct.hpp"
#include "prolate/exactalg/text.hpp"

namespace prolate::cli {

namespace fs = std::filesystem;
using exactalg::parse_rational;

namespace {

void only_keys(const YAML::Node& n, const std::set<std::string>& allowed, const std::string& where) {
  if (!n.IsMap()) throw Error(ErrorCode::Config, where + " must be a map");
  for (const auto& kv : n) {
    const std::string k = kv.first.as<std::string>();
    if (!allowed.count(k)) throw Error(ErrorCode::Config, "unknown key '" + k + "' in " + where);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

darboux::DarbouxData datum_from(const YAML::Node& root, const std::string& base, std::string& source) {
  int given = 0;
  for (const char* k : {"data", "ladder", "identity", "seeds"}) given += root[k] ? 1 : 0;
  if (given != 1) throw Error(ErrorCode::Config, "exactly one of data, ladder, identity, seeds is required");

  if (const auto n = root["data"]) {
    if (n.IsScalar()) {
      const fs::path p = fs::path(base) / n.as<std::string>();
      source = "data " + n.as<std::string>();
      return darboux::from_yaml(read_file(p.string()));
    }
    source = "inline data";
    return darboux::from_yaml(YAML::Dump(n));
  }
  if (const auto n = root["ladder"]) {
    only_keys(n, {"nu", "steps"}, "ladder");
    const exactalg::Rational nu = parse_rational(n["nu"].as<std::string>("0"));
    const int steps = n["steps"].as<int>(2);
    source = "ladder nu=" + exactalg::to_string(nu) + " steps=" + std::to_string(steps);
    return darboux::ladder(nu, steps);
  }
  if (const auto n = root["identity"]) {
    const auto fam = bispectral::Family::parse(n.as<std::string>());
    source = "identity " + fam.to_string();
    return darboux::DarbouxData::identity(fam);
  }
  const auto n = root["seeds"];
  only_keys(n, {"family", "list"}, "seeds");
  const auto fam = bispectral::Family::parse(n["family"].as<std::string>());
  std::vector<darboux::Seed> seeds;
  for (const auto& s : n["list"]) {
    only_keys(s, {"alpha", "lambda", "q"}, "seed");
    const exactalg::Poly q = exactalg::parse_poly(s["q"].as<std::string>("1"), 'x');
    if (s["lambda"])
      seeds.push_back(darboux::Seed::airy_jet(parse_rational(s["lambda"].as<std::string>()), q));
    else
      seeds.push_back(darboux::Seed::quasi_rational(parse_rational(s["alpha"].as<std::string>("0")), q));
  }
  source = "kernel seeds (" + std::to_string(seeds.size()) + ")";
  const darboux::KernelResult kr = darboux::darboux_from_kernel(fam, seeds);
  if (!kr.data)
    throw Error(kr.certificate.failure.value_or(ErrorCode::FactorizationFails),
                "seeds do not give a selfadjoint datum: " + kr.certificate.message);
  return *kr.data;
}

}  // namespace

JobConfig parse_config(const std::string& yaml, const std::string& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::Config, std::string("yaml: ") + e.what());
  }
  JobConfig job;
  try {
    only_keys(root, {"data", "ladder", "identity", "seeds", "contours", "search", "dims", "kernel", "tests",
                     "tolerance", "points", "out"},
              "config");
    job.data = datum_from(root, base_dir, job.source);
    if (const auto c = root["contours"]) {
      only_keys(c, {"gamma1", "gamma2"}, "contours");
      if (c["gamma1"]) job.gamma1 = commute::ContourSpec::from_yaml(YAML::Dump(c["gamma1"]));
      if (c["gamma2"]) job.gamma2 = commute::ContourSpec::from_yaml(YAML::Dump(c["gamma2"]));
    }
    if (const auto s = root["search"]) {
      only_keys(s, {"minimal", "l1", "l2", "budget"}, "search");
      job.search.minimal = s["minimal"].as<bool>(!(s["l1"] || s["l2"]));
      job.search.l1 = s["l1"].as<int>(0);
      job.search.l2 = s["l2"].as<int>(0);
      job.search.budget = s["budget"].as<int>(job.search.budget);
    }
    if (const auto d = root["dims"]) {
      only_keys(d, {"max_l"}, "dims");
      job.max_l = d["max_l"].as<int>(job.max_l);
    }
    if (const auto k = root["kernel"]) {
      only_keys(k, {"kind", "grid", "rule", "panel_order", "ray_length", "tail_tolerance"}, "kernel");
      job.kernel.kind = numverify::parse_kernel_kind(k["kind"].as<std::string>("single"));
      job.kernel.grid.points = k["grid"].as<int>(job.kernel.grid.points);
      job.kernel.rule.points = k["rule"].as<int>(job.kernel.rule.points);
      const int po = k["panel_order"].as<int>(20);
      job.kernel.grid.panel_order = job.kernel.rule.panel_order = po;
      const double t = k["ray_length"].as<double>(8.0);
      job.kernel.grid.ray_length = job.kernel.rule.ray_length = t;
      job.kernel.tail_tolerance = k["tail_tolerance"].as<double>(job.kernel.tail_tolerance);
    }
    job.tests = root["tests"].as<int>(job.tests);
    job.residual_tolerance = root["tolerance"].as<double>(job.residual_tolerance);
    if (const auto p = root["points"]) {
      for (const auto& q : p) {
        if (!q.IsSequence() || q.size() != 4) throw Error(ErrorCode::Config, "point must be [x_re, x_im, z_re, z_im]");
        job.points.push_back({{q[0].as<double>(), q[1].as<double>()}, {q[2].as<double>(), q[3].as<double>()}});
      }
    }
    if (const auto o = root["out"]) job.out_dir = (fs::path(base_dir) / o.as<std::string>()).string();
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::Config, std::string("yaml: ") + e.what());
  }
  if (job.tests < 1 || job.max_l < 0 || job.residual_tolerance <= 0.0)
    throw Error(ErrorCode::Config, "tests, dims.max_l and tolerance must be positive");
  return job;
}

JobConfig load_config(const std::string& path) {
  const fs::path p(path);
  return parse_config(read_file(path), p.has_parent_path() ? p.parent_path().string() : ".");
}

void apply(JobConfig& job, const Overrides& o) {
  if (o.l1 || o.l2) {
    job.search.minimal = false;
    if (o.l1) job.search.l1 = *o.l1;
    if (o.l2) job.search.l2 = *o.l2;
  }
  if (o.minimal) job.search.minimal = true;
  if (o.tol) {
    if (*o.tol <= 0.0) throw Error(ErrorCode::Config, "--tol must be positive");
    job.residual_tolerance = *o.tol;
  }
  if (o.grid) {
    if (*o.grid < 1) throw Error(ErrorCode::Config, "--grid must be positive");
    job.kernel.grid.points = *o.grid;
  }
  if (o.out) job.out_dir = *o.out;
}

}  // namespace prolate::cli
