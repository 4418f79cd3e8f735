#include "prolate/darboux/construct.hpp"

#include "prolate/bispectral/bmap.hpp"

namespace prolate::darboux {

using exactalg::RatFn;

DarbouxData ladder(const Rational& nu, int steps) {
  if (steps < 0 || steps % 2 != 0) {
    throw Error(ErrorCode::EvennessViolation, "ladder needs an even number of steps, got " + std::to_string(steps));
  }
  DarbouxData d;
  d.family = Family::bessel(nu);
  const DiffOp D = DiffOp::derivative(Var::X);
  DiffOp P = DiffOp::identity(Var::X);
  for (int j = 1; j <= steps; ++j) {
    P = (D - DiffOp::function(RatFn(nu + j) * RatFn::x_power(-1), Var::X)) * P;
  }
  d.R = RatFn(Poly::monomial(1, steps)) * P;
  d.v = Poly::monomial(1, steps / 2);
  d.m = steps;
  d.normalizer = Poly::monomial(1, steps);
  d.epsilon = 1;
  return d;
}

namespace {

/// A function expressed as sum_c comp[c] * basis_c, with basis functions
/// that are algebraically independent over Q(x).
using Components = std::vector<RatFn>;

/// Derivatives 0..n of one seed, in components.
std::vector<Components> seed_jets(const Seed& s, int n) {
  std::vector<Components> out;
  if (s.kind == Seed::Kind::QuasiRational) {
    // f = x^alpha r,  f' = x^alpha (r' + alpha r / x)
    RatFn r(s.q);
    for (int k = 0; k <= n; ++k) {
      out.push_back({r});
      r = r.derivative() + RatFn(s.alpha) * RatFn::x_power(-1) * r;
    }
    return out;
  }
  // f = a A + b A' with A = A(x + lambda), A'' = (x + lambda) A
  const RatFn shift(Poly::x() + Poly(s.lambda));
  auto next = [&](const Components& c) {
    return Components{c[0].derivative() + shift * c[1], c[0] + c[1].derivative()};
  };
  Components f{RatFn(), RatFn()};
  Components basis{RatFn(1), RatFn()};
  for (int i = 0; i <= s.q.degree(); ++i) {
    f[0] += RatFn(s.q.coeff(i)) * basis[0];
    f[1] += RatFn(s.q.coeff(i)) * basis[1];
    basis = next(basis);
  }
  for (int k = 0; k <= n; ++k) {
    out.push_back(f);
    f = next(f);
  }
  return out;
}

/// Solves the square system A p = b over Q(x); nullopt when singular.
std::optional<std::vector<RatFn>> solve(std::vector<std::vector<RatFn>> a, std::vector<RatFn> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const RatFn f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<RatFn> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Even polynomial divisible by every denominator.
Poly even_denominator(const Poly& den) {
  Poly w = exactalg::lcm(den, den.reflect().monic());
  if (w.degree() % 2 != 0) w = w.shift(1);
  return w;
}

Poly square_root_variable(const Poly& even) {
  std::vector<Rational> c;
  for (int j = 0; j <= even.degree(); j += 2) c.push_back(even.coeff(j));
  return Poly(c);
}

}  // namespace

KernelResult darboux_from_kernel(const Family& family, const std::vector<Seed>& seeds) {
  if (seeds.empty()) throw Error(ErrorCode::SeedsDependent, "no seeds");
  const bool airy = family.is_airy();
  for (const auto& s : seeds) {
    if ((s.kind == Seed::Kind::AiryJet) != airy) {
      throw Error(ErrorCode::NonRationalCoefficients, "seed kind does not match the family");
    }
    if (s.q.is_zero()) throw Error(ErrorCode::SeedsDependent, "zero seed");
  }
  const int per_seed = airy ? 2 : 1;
  const int n = per_seed * static_cast<int>(seeds.size());

  // rows: one per component of every seed; unknowns p_0..p_{n-1}
  std::vector<std::vector<RatFn>> a;
  std::vector<RatFn> b;
  for (const auto& s : seeds) {
    const auto jets = seed_jets(s, n);
    for (int c = 0; c < per_seed; ++c) {
      std::vector<RatFn> row;
      for (int k = 0; k < n; ++k) row.push_back(jets[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
      a.push_back(std::move(row));
      b.push_back(-jets[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)]);
    }
  }
  const auto p = solve(a, b);
  if (!p) throw Error(ErrorCode::SeedsDependent, "Wronskian vanishes identically");

  KernelResult out;
  out.P = DiffOp::derivative(Var::X, n);
  Poly den = Poly::one();
  for (int k = 0; k < n; ++k) {
    out.P.add_term((*p)[static_cast<std::size_t>(k)], k);
    den = exactalg::lcm(den, (*p)[static_cast<std::size_t>(k)].den());
  }

  // (aP)P must be a polynomial in L
  const DiffOp L = bispectral::base_operator(family, Var::X);
  const DiffOp app = exactalg::adjoint(out.P) * out.P;
  Poly F;
  try {
    const auto dec = airy ? bispectral::decompose_airy(app) : bispectral::decompose_bessel(app, family.nu);
    std::vector<Rational> coeffs;
    for (const auto& [key, c] : dec.coeffs) {
      if (key.m != 0 || key.with_d) throw Error(ErrorCode::FactorizationFails, "(aP)P is not a polynomial in L");
      if (static_cast<int>(coeffs.size()) <= key.n) coeffs.resize(static_cast<std::size_t>(key.n) + 1, Rational(0));
      coeffs[static_cast<std::size_t>(key.n)] = c;
    }
    F = Poly(coeffs);
  } catch (const Error& e) {
    out.certificate.failure = e.code() == ErrorCode::NonPolynomial ? ErrorCode::FactorizationFails : e.code();
    out.certificate.message = e.what();
    out.certificate.residual = app;
    return out;
  }

  DarbouxData d;
  d.family = family;
  d.epsilon = sgn(F.lead()) < 0 ? -1 : 1;
  const Poly eF = F * Rational(d.epsilon);
  std::optional<Poly> g;
  if (airy) {
    g = poly_sqrt(eF);
    d.m = 0;
  } else {
    d.m = eF.valuation();
    if (d.m >= 0) g = poly_sqrt(exactalg::divexact(eF, Poly::monomial(1, d.m)));
  }
  if (!g) {
    out.certificate.failure = ErrorCode::FactorizationFails;
    out.certificate.message = "(aP)P = " + to_string(F, 't') + "(L) is not of the form eps g^2";
    out.certificate.residual = app;
    return out;
  }
  d.g = *g;
  d.normalizer = airy ? *g : g->of_square().shift(d.m);
  const Poly V = airy ? den : even_denominator(den);
  d.v = airy ? V : square_root_variable(V);
  d.R = RatFn(V) * out.P;
  out.certificate = darboux_verify(d);
  d.verified = out.certificate.ok();
  out.data = d;
  return out;
}

}  // namespace prolate::darboux
