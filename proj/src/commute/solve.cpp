#include "prolate/commute/solve.hpp"

#include <yaml-cpp/yaml.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "prolate/error.hpp"
#include "prolate/exactalg/text.hpp"

namespace prolate::commute {

using exactalg::OpFrame;
using exactalg::Poly;
using exactalg::RatFn;
using exactalg::SymForm;
using exactalg::Var;
using exactalg::Vector;

namespace {

bool invariant(const OpPair& p) {
  return exactalg::reflect(p.x) == p.x && exactalg::reflect(p.z) == p.z;
}

std::vector<GaussianRational> condition_points(const ContourSpec& g, bool halve) {
  std::vector<GaussianRational> out;
  for (const auto& e : g.endpoints()) {
    bool dup = false;
    for (const auto& q : out) dup = dup || q == e.point || (halve && q == -e.point);
    if (!dup) out.push_back(e.point);
  }
  return out;
}

void append_rows(Matrix& rows, const std::vector<SymForm>& forms, const std::vector<GaussianRational>& points) {
  int n_max = 0;
  for (const auto& f : forms) n_max = std::max(n_max, f.n());
  for (const auto& xi : points) {
    std::vector<std::vector<GaussianRational>> vals;
    for (const auto& f : forms) {
      try {
        vals.push_back(exactalg::jet_values(f, xi, n_max));
      } catch (const Error& e) {
        throw Error(ErrorCode::PoleOnContour, std::string("at endpoint ") + exactalg::to_string(xi) + ": " + e.what());
      }
    }
    const std::size_t nc = vals.empty() ? 0 : vals.front().size();
    for (std::size_t c = 0; c < nc; ++c) {
      Vector re(forms.size()), im(forms.size());
      bool any_re = false, any_im = false;
      for (std::size_t j = 0; j < forms.size(); ++j) {
        re[j] = vals[j][c].re;
        im[j] = vals[j][c].im;
        any_re = any_re || sgn(re[j]) != 0;
        any_im = any_im || sgn(im[j]) != 0;
      }
      if (any_re) rows.push_back(std::move(re));
      if (any_im) rows.push_back(std::move(im));
    }
  }
}

SymForm checked_form(const DiffOp& d) {
  try {
    return exactalg::symmetric_form(d);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotSymmetricGenerator, e.what());
  }
}

}  // namespace

std::vector<std::complex<double>> roots(const Poly& p) {
  if (p.degree() < 1) return {};
  Eigen::VectorXd c(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) c[k] = exactalg::to_double(p.coeff(k));
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(c);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.push_back(solver.roots()[i]);
  return out;
}

std::vector<std::complex<double>> singular_points(const DarbouxData& d, Var side) {
  Poly p = side == Var::X ? d.v_of_x() : d.normalizer;
  if (d.family.is_bessel() && sgn(d.family.nu * (d.family.nu + 1)) != 0) p = p * Poly::x();
  return roots(p);
}

CountingResult counting_condition(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2, int l1,
                                  int l2) {
  const darboux::Certificate cert = darboux::darboux_verify(d);
  if (!cert.ok()) throw Error(ErrorCode::UnverifiedData, "counting needs certified data: " + cert.message);
  CountingResult r;
  r.mode = d.family.is_bessel() && g1.symmetric() && g2.symmetric() ? CountingMode::II : CountingMode::I;
  const int q = r.mode == CountingMode::I ? 2 : 4;
  r.estimate = (l1 + 1) * (l2 + 1) - cert.rho1 * cert.rho2;
  const auto e1 = static_cast<long>(g1.endpoints().size());
  const auto e2 = static_cast<long>(g2.endpoints().size());
  r.bound = Rational(l1 * (l1 + 1) * e1, q) + Rational(l2 * (l2 + 1) * e2, q);
  r.predicted = Rational(r.estimate) > r.bound;
  return r;
}

LinearSystem assemble_system(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2, int l1, int l2) {
  g1.validate(d.family);
  g2.validate(d.family);
  if (g1.passes_through_root(singular_points(d, Var::X))) {
    throw Error(ErrorCode::PoleOnContour, "x-contour meets a singular point of the operators");
  }
  if (g2.passes_through_root(singular_points(d, Var::Z))) {
    throw Error(ErrorCode::PoleOnContour, "z-contour meets a singular point of the operators");
  }

  const darboux::SSpaces s = darboux::s_spaces(d, l1, l2);
  std::vector<OpPair> gens = s.s1.generators();
  gens.insert(gens.end(), s.s2.generators().begin(), s.s2.generators().end());

  LinearSystem sys;
  if (!gens.empty()) {
    // independent generators = pivot columns of the transposed matrix
    const Matrix m = bispectral::pair_matrix(gens);
    Matrix t(m.front().size(), Vector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    }
    for (int p : exactalg::rref(t, static_cast<int>(m.size())).pivots) sys.basis.push_back(gens[static_cast<std::size_t>(p)]);
  }
  for (const auto& b : sys.basis) {
    sys.sym_x.push_back(checked_form(b.x));
    sys.sym_z.push_back(checked_form(b.z));
  }

  const bool mode2 = counting_condition(d, g1, g2, l1, l2).mode == CountingMode::II;
  sys.halved = mode2 && std::all_of(sys.basis.begin(), sys.basis.end(), invariant);
  sys.x_points = condition_points(g1, sys.halved);
  sys.z_points = condition_points(g2, sys.halved);
  append_rows(sys.rows, sys.sym_x, sys.x_points);
  append_rows(sys.rows, sys.sym_z, sys.z_points);
  return sys;
}

std::optional<OpPair> canonical_representative(const std::vector<OpPair>& solutions, int* dim_mod_constants) {
  std::vector<OpPair> all = solutions;
  all.push_back({DiffOp::identity(Var::X), DiffOp::identity(Var::Z)});
  std::vector<const DiffOp*> xs, zs;
  for (const auto& p : all) {
    xs.push_back(&p.x);
    zs.push_back(&p.z);
  }
  const OpFrame fx(xs), fz(zs);
  Matrix m;
  for (const auto& p : all) {
    Vector row = fx.coords(p.x);
    const Vector rz = fz.coords(p.z);
    row.insert(row.end(), rz.begin(), rz.end());
    m.push_back(std::move(row));
  }
  const Vector identity = m.back();
  const exactalg::Rref r = exactalg::rref(std::move(m));
  if (dim_mod_constants) *dim_mod_constants = r.rank() - 1;
  int best = -1;
  for (int i = 0; i < r.rank(); ++i) {
    const Vector& row = r.rows[static_cast<std::size_t>(i)];
    const Rational scale = identity[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])];
    bool constant = sgn(scale) != 0;
    for (std::size_t j = 0; constant && j < row.size(); ++j) constant = row[j] * scale == identity[j];
    if (!constant) best = i;
  }
  if (best < 0) return std::nullopt;
  const Vector& row = r.rows[static_cast<std::size_t>(best)];
  return OpPair{fx.op(row, Var::X), fz.op(row, Var::Z, static_cast<std::size_t>(fx.width()))};
}

bool CommutingSolution::certified() const {
  if (!exactalg::is_formally_symmetric(D) || !exactalg::is_formally_symmetric(S)) return false;
  return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.form_zero; });
}

namespace {

std::optional<CommutingSolution> solve_at(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2, int l1,
                                          int l2, const CountingResult& counting) {
  const LinearSystem sys = assemble_system(d, g1, g2, l1, l2);
  const Matrix null = exactalg::nullspace(sys.rows, sys.unknowns());
  if (counting.predicted && null.empty()) {
    throw Error(ErrorCode::NoNonconstantSolution,
                "counting condition predicted a solution at (" + std::to_string(l1) + "," + std::to_string(l2) +
                    ") but the system has none (implementation bug signal)");
  }
  std::vector<OpPair> sols;
  for (const auto& u : null) {
    OpPair p{DiffOp(Var::X), DiffOp(Var::Z)};
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (sgn(u[j]) == 0) continue;
      p.x += sys.basis[j].x * u[j];
      p.z += sys.basis[j].z * u[j];
    }
    sols.push_back(std::move(p));
  }
  CommutingSolution out;
  const auto rep = canonical_representative(sols, &out.solution_dim);
  if (!rep) return std::nullopt;
  out.D = rep->x;
  out.S = rep->z;
  out.l1 = l1;
  out.l2 = l2;
  out.counting = counting;
  out.sym_x = exactalg::symmetric_form(out.D);
  out.sym_z = exactalg::symmetric_form(out.S);
  for (const auto& e : g1.endpoints()) {
    out.certificates.push_back({e.point, 'x', exactalg::boundary_form(out.D, e.point).is_zero()});
  }
  for (const auto& e : g2.endpoints()) {
    out.certificates.push_back({e.point, 'z', exactalg::boundary_form(out.S, e.point).is_zero()});
  }
  return out;
}

}  // namespace

CommutingSolution solve_commuting(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2,
                                  const Search& search) {
  if (!search.minimal) {
    const CountingResult c = counting_condition(d, g1, g2, search.l1, search.l2);
    auto sol = solve_at(d, g1, g2, search.l1, search.l2, c);
    if (!sol) {
      throw Error(ErrorCode::NoNonconstantSolution,
                  std::string("only constants at (") + std::to_string(search.l1) + "," + std::to_string(search.l2) +
                      ")" + (c.predicted ? "; counting condition predicted success" : ""));
    }
    return *sol;
  }
  for (int total = 0; total <= search.budget; ++total) {
    std::vector<std::pair<int, int>> order;
    for (int l1 = 0; l1 <= total; ++l1) order.emplace_back(l1, total - l1);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return std::abs(a.first - a.second) < std::abs(b.first - b.second);
    });
    for (const auto& [l1, l2] : order) {
      const CountingResult c = counting_condition(d, g1, g2, l1, l2);
      if (!c.predicted) continue;
      if (auto sol = solve_at(d, g1, g2, l1, l2, c)) return *sol;
    }
  }
  throw Error(ErrorCode::SearchBudgetExceeded, "no nonconstant solution with l1 + l2 <= " + std::to_string(search.budget));
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void emit_form(YAML::Emitter& out, const SymForm& f, char var) {
  out << YAML::BeginSeq;
  for (const auto& c : f.c) out << YAML::DoubleQuoted << exactalg::to_text(c, var);
  out << YAML::EndSeq;
}

}  // namespace

std::string report(const CommutingSolution& s) {
  YAML::Emitter body;
  body << YAML::BeginMap;
  body << YAML::Key << "l1" << YAML::Value << s.l1;
  body << YAML::Key << "l2" << YAML::Value << s.l2;
  body << YAML::Key << "solution_dim" << YAML::Value << s.solution_dim;
  body << YAML::Key << "counting" << YAML::Value << YAML::BeginMap;
  body << YAML::Key << "mode" << YAML::Value << (s.counting.mode == CountingMode::I ? "i" : "ii");
  body << YAML::Key << "estimate" << YAML::Value << s.counting.estimate;
  body << YAML::Key << "bound" << YAML::Value << exactalg::to_string(s.counting.bound);
  body << YAML::Key << "predicted" << YAML::Value << s.counting.predicted;
  body << YAML::EndMap;
  body << YAML::Key << "order" << YAML::Value << s.D.order();
  body << YAML::Key << "D" << YAML::Value << YAML::DoubleQuoted << exactalg::to_text(s.D);
  body << YAML::Key << "S" << YAML::Value << YAML::DoubleQuoted << exactalg::to_text(s.S);
  body << YAML::Key << "sym_x" << YAML::Value;
  emit_form(body, s.sym_x, 'x');
  body << YAML::Key << "sym_z" << YAML::Value;
  emit_form(body, s.sym_z, 'z');
  body << YAML::Key << "certificates" << YAML::Value << YAML::BeginSeq;
  for (const auto& c : s.certificates) {
    body << YAML::Flow << YAML::BeginMap;
    body << YAML::Key << "side" << YAML::Value << std::string(1, c.side);
    body << YAML::Key << "point" << YAML::Value << YAML::DoubleQuoted << exactalg::to_string(c.point);
    body << YAML::Key << "boundary_form_zero" << YAML::Value << c.form_zero;
    body << YAML::EndMap;
  }
  body << YAML::EndSeq;
  body << YAML::EndMap;
  std::string text = std::string(body.c_str()) + "\n";
  return text + "digest: " + digest(text) + "\n";
}

}  // namespace prolate::commute
