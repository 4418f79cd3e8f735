#include "prolate/darboux/verify.hpp"

#include "prolate/bispectral/bmap.hpp"

namespace prolate::darboux {

using bispectral::base_operator;

namespace {

Certificate fail(Certificate c, ErrorCode code, std::string msg) {
  c.failure = code;
  c.message = std::move(msg);
  return c;
}

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace

std::optional<Poly> poly_sqrt(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (p.degree() % 2 != 0 || sgn(p.lead()) < 0) return std::nullopt;
  const Rational& lead = p.lead();
  if (!is_square(lead.get_num()) || !is_square(lead.get_den())) return std::nullopt;
  const int n = p.degree() / 2;
  const Rational s0(sqrt(lead.get_num()), sqrt(lead.get_den()));
  // coefficients of the root from the top down
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  r[static_cast<std::size_t>(n)] = s0;
  for (int k = n - 1; k >= 0; --k) {
    // coefficient of t^{n+k} in r^2
    Rational acc = p.coeff(n + k);
    for (int j = k + 1; j < n; ++j) acc -= r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(n + k - j)];
    r[static_cast<std::size_t>(k)] = acc / (2 * s0);
  }
  Poly root(r);
  if (root * root != p) return std::nullopt;
  return root;
}

Certificate darboux_verify(const DarbouxData& d) {
  Certificate c;
  c.epsilon = d.epsilon;
  c.epsilon_is_parity = d.family.is_airy() || (d.epsilon == (d.m % 2 == 0 ? 1 : -1));
  if (d.R.is_zero() || d.R.var() != Var::X) return fail(c, ErrorCode::FactorizationFails, "R must be a nonzero x-side operator");
  if (!d.R.is_polynomial()) return fail(c, ErrorCode::NonPolynomial, "R must have polynomial coefficients");
  c.rho1 = d.R.order();

  if (d.family.is_bessel() && sgn(d.g.coeff(0)) == 0) {
    return fail(c, ErrorCode::FactorizationFails, "g(0) = 0");
  }
  const Poly fz = d.f_eigenvalue();
  if (d.normalizer * d.normalizer != fz) {
    return fail(c, ErrorCode::FactorizationFails,
                "normalizer^2 = " + to_string(d.normalizer * d.normalizer, 'z') + " differs from " +
                    to_string(fz, 'z'));
  }

  const DiffOp P = d.P();
  const DiffOp L = base_operator(d.family, Var::X);
  const DiffOp F = poly_of(d.f_poly(), L);
  c.residual = exactalg::adjoint(P) * P - Rational(d.epsilon) * F;
  if (!c.residual.is_zero()) return fail(c, ErrorCode::FactorizationFails, "(aP)P - epsilon F(L) is nonzero");

  if (d.family.even_mode() && exactalg::reflect(P) != P) {
    return fail(c, ErrorCode::EvennessViolation, "P(-x,-d) != P(x,d)");
  }
  try {
    c.bR = bispectral::b_map(d.family, d.R);
  } catch (const Error& e) {
    return fail(c, e.code(), e.what());
  }
  c.rho2 = c.bR.order();
  return c;
}

Certificate certify(DarbouxData& d) {
  Certificate c = darboux_verify(d);
  if (!c.ok()) throw Error(*c.failure, c.message);
  d.verified = true;
  return c;
}

DualPresentation dual_presentation(const DarbouxData& d) {
  if (!d.verified) throw Error(ErrorCode::UnverifiedData, "dual presentation needs certified data");
  DualPresentation out;
  out.bR = bispectral::b_map(d.family, d.R);
  const DiffOp Lz = base_operator(d.family, Var::Z);
  const DiffOp vl = poly_of(d.v, Lz);
  const DiffOp lhs = vl * vl;
  const RatFn inv_n2(Poly::one(), d.normalizer * d.normalizer);
  const DiffOp rhs = exactalg::adjoint(out.bR) * (inv_n2 * out.bR);
  if (lhs == rhs) {
    out.epsilon = 1;
  } else if (lhs == -rhs) {
    out.epsilon = -1;
  } else {
    throw Error(ErrorCode::DualFactorizationFails, "v(L(z))^2 != +-a(bR) N^-2 bR");
  }
  return out;
}

}  // namespace prolate::darboux
