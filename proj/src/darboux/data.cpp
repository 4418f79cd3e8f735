#include "prolate/darboux/data.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "prolate/bispectral/family.hpp"
#include "prolate/error.hpp"
#include "prolate/exactalg/text.hpp"

namespace prolate::darboux {

Poly DarbouxData::v_of_x() const { return family.is_airy() ? v : v.of_square(); }

DiffOp DarbouxData::P() const {
  return RatFn(Poly::one(), v_of_x()) * R;
}

Poly DarbouxData::f_poly() const {
  const Poly g2 = g * g;
  return family.is_airy() ? g2 : g2.shift(m);
}

Poly DarbouxData::f_eigenvalue() const {
  return family.is_airy() ? f_poly() : f_poly().of_square();
}

DarbouxData DarbouxData::identity(const Family& f) {
  DarbouxData d;
  d.family = f;
  d.R = DiffOp::identity(Var::X);
  return d;
}

DiffOp poly_of(const Poly& p, const DiffOp& a) {
  // Horner
  DiffOp out(a.var());
  for (int k = p.degree(); k >= 0; --k) {
    out = out * a;
    out += DiffOp::function(RatFn(p.coeff(k)), a.var());
  }
  return out;
}

namespace {

char v_var(const Family& f) { return f.is_airy() ? 'x' : 't'; }

std::string scalar_field(const YAML::Node& n, const char* key, bool required = true) {
  const YAML::Node v = n[key];
  if (!v) {
    if (required) throw Error(ErrorCode::Config, std::string("missing field '") + key + "'");
    return {};
  }
  if (!v.IsScalar()) throw Error(ErrorCode::Config, std::string("field '") + key + "' must be a scalar");
  return v.as<std::string>();
}

}  // namespace

std::string to_yaml(const DarbouxData& d) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "family" << YAML::Value << d.family.to_string();
  out << YAML::Key << "R" << YAML::Value << YAML::DoubleQuoted << exactalg::to_text(d.R);
  out << YAML::Key << "v" << YAML::Value << YAML::DoubleQuoted << to_string(d.v, v_var(d.family));
  out << YAML::Key << "g" << YAML::Value << YAML::DoubleQuoted << to_string(d.g, 't');
  out << YAML::Key << "m" << YAML::Value << d.m;
  out << YAML::Key << "normalizer" << YAML::Value << YAML::DoubleQuoted << to_string(d.normalizer, 'z');
  out << YAML::Key << "epsilon" << YAML::Value << d.epsilon;
  if (d.verified) out << YAML::Key << "verified" << YAML::Value << true;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

DarbouxData from_yaml(const std::string& text) {
  YAML::Node n;
  try {
    n = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::Config, std::string("yaml: ") + e.what());
  }
  if (!n.IsMap()) throw Error(ErrorCode::Config, "Darboux data must be a mapping");
  DarbouxData d;
  d.family = Family::parse(scalar_field(n, "family"));
  d.R = exactalg::parse_diffop(scalar_field(n, "R"), Var::X);
  const std::string v = scalar_field(n, "v", false);
  if (!v.empty()) d.v = exactalg::parse_poly(v, v_var(d.family));
  const std::string g = scalar_field(n, "g", false);
  if (!g.empty()) d.g = exactalg::parse_poly(g, 't');
  const std::string nz = scalar_field(n, "normalizer", false);
  if (!nz.empty()) d.normalizer = exactalg::parse_poly(nz, 'z');
  try {
    if (n["m"]) d.m = n["m"].as<int>();
    if (n["epsilon"]) d.epsilon = n["epsilon"].as<int>();
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::Config, std::string("yaml: ") + e.what());
  }
  if (d.m < 0) throw Error(ErrorCode::Config, "m must be nonnegative");
  if (d.epsilon != 1 && d.epsilon != -1) throw Error(ErrorCode::Config, "epsilon must be +1 or -1");
  if (d.v.is_zero() || d.g.is_zero() || d.normalizer.is_zero()) {
    throw Error(ErrorCode::Config, "v, g and normalizer must be nonzero");
  }
  return d;
}

DarbouxData load_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_yaml(ss.str());
}

}  // namespace prolate::darboux
