#include "prolate/darboux/spaces.hpp"

#include <sstream>

#include "prolate/bispectral/bmap.hpp"

namespace prolate::darboux {

using bispectral::OpPair;

namespace {

void check_generator(const OpPair& p) {
  if (!exactalg::is_formally_symmetric(p.x) || !exactalg::is_formally_symmetric(p.z)) {
    throw Error(ErrorCode::NotSymmetricGenerator, "S-space generator is not fixed by the adjoint");
  }
}

}  // namespace

SSpaces s_spaces(const DarbouxData& d, int l1, int l2) {
  if (!d.verified) throw Error(ErrorCode::UnverifiedData, "S-spaces need certified data");
  const Certificate cert = darboux_verify(d);
  SSpaces out;
  out.rho1 = cert.rho1;
  out.rho2 = cert.rho2;

  const DiffOp P = d.P();
  const DiffOp aP = exactalg::adjoint(P);
  const DiffOp N = DiffOp::function(RatFn(d.normalizer), Var::Z);
  const DiffOp Ninv = DiffOp::function(RatFn(Poly::one(), d.normalizer), Var::Z);
  const DiffOp V = DiffOp::function(RatFn(d.v_of_x()), Var::X);

  std::vector<OpPair> g1, g2;
  if (l1 >= out.rho1) {
    const Rational eps(d.epsilon);
    const SymSpace base = bispectral::sym_filtration(d.family, l1 - out.rho1, l2);
    for (const auto& m : base.generators()) {
      g1.push_back({P * m.x * aP, eps * (N * m.z * N)});
      check_generator(g1.back());
    }
  }
  if (l2 >= out.rho2) {
    const DualPresentation dual = dual_presentation(d);
    const DiffOp left = Ninv * dual.bR;
    const DiffOp right = exactalg::adjoint(dual.bR) * Ninv;
    const Rational eps(dual.epsilon);
    const SymSpace base = bispectral::sym_filtration(d.family, l1, l2 - out.rho2);
    for (const auto& m : base.generators()) {
      g2.push_back({V * m.x * V, eps * (left * m.z * right)});
      check_generator(g2.back());
    }
  }
  out.s1 = SymSpace(std::move(g1));
  out.s2 = SymSpace(std::move(g2));
  return out;
}

DimReport dim_bounds_check(const SSpaces& s, const DarbouxData& d, int l1, int l2, bool throw_on_violation) {
  DimReport r;
  r.l1 = l1;
  r.l2 = l2;
  r.rho1 = s.rho1;
  r.rho2 = s.rho2;
  r.dim_s1 = s.s1.rank();
  r.dim_s2 = s.s2.rank();
  r.dim_sum = (s.s1 + s.s2).rank();
  r.dim_intersection = r.dim_s1 + r.dim_s2 - r.dim_sum;
  r.sum_bound = (l1 + 1) * (l2 + 1) - s.rho1 * s.rho2;
  r.intersection_bound_applies = l1 >= s.rho1 && l2 >= s.rho2;
  if (r.intersection_bound_applies) r.intersection_bound = (l1 - s.rho1 + 1) * (l2 - s.rho2 + 1);
  if (d.family.even_mode()) {
    r.parity_checked = true;
    for (const SymSpace* sp : {&s.s1, &s.s2}) {
      for (const auto& g : sp->generators()) {
        if (exactalg::reflect(g.x) != g.x || exactalg::reflect(g.z) != g.z) r.parity_ok = false;
      }
    }
  }
  if (throw_on_violation && !r.ok()) throw Error(ErrorCode::BoundViolated, to_string(r));
  return r;
}

DimReport dim_bounds_check(const DarbouxData& d, int l1, int l2, bool throw_on_violation) {
  return dim_bounds_check(s_spaces(d, l1, l2), d, l1, l2, throw_on_violation);
}

std::string to_string(const DimReport& r) {
  std::ostringstream os;
  os << "l1=" << r.l1 << " l2=" << r.l2 << " dimS1=" << r.dim_s1 << " dimS2=" << r.dim_s2
     << " dim(S1+S2)=" << r.dim_sum << " >= " << r.sum_bound << " dim(S1^S2)=" << r.dim_intersection;
  if (r.intersection_bound_applies) os << " <= " << r.intersection_bound;
  if (r.parity_checked) os << " parity=" << (r.parity_ok ? "ok" : "broken");
  os << (r.ok() ? " pass" : " FAIL");
  return os.str();
}

}  // namespace prolate::darboux
