#include "prolate/bispectral/bmap.hpp"

#include "prolate/error.hpp"

namespace prolate::bispectral {

using exactalg::Poly;
using exactalg::RatFn;

namespace {

/// Lazily extended list of powers of one operator.
class Powers {
 public:
  explicit Powers(DiffOp base) : base_(std::move(base)) { pow_.push_back(DiffOp::identity(base_.var())); }

  const DiffOp& operator[](int k) {
    while (static_cast<int>(pow_.size()) <= k) pow_.push_back(pow_.back() * base_);
    return pow_[static_cast<std::size_t>(k)];
  }

 private:
  DiffOp base_;
  std::vector<DiffOp> pow_;
};

DiffOp times_power(const Rational& c, int e, const DiffOp& d) {
  return RatFn(Poly::monomial(c, e)) * d;
}

void require_polynomial(const DiffOp& r) {
  if (!r.is_polynomial()) throw Error(ErrorCode::NonPolynomial, "operator has non-polynomial coefficients");
}

/// b(v^j d^k) = d^k T^j for an anti-homomorphism with v -> T, d -> d.
DiffOp weyl_anti_map(const DiffOp& r, const DiffOp& image_of_v, Var target) {
  require_polynomial(r);
  Powers tp(image_of_v);
  DiffOp out(target);
  for (int k = 0; !r.is_zero() && k <= r.order(); ++k) {
    const Poly& p = r.coeff(k).num();
    if (p.is_zero()) continue;
    DiffOp acc(target);
    for (int j = 0; j <= p.degree(); ++j) {
      if (sgn(p.coeff(j)) == 0) continue;
      acc += tp[j] * p.coeff(j);
    }
    out += DiffOp::derivative(target, k) * acc;
  }
  return out;
}

bool is_even(const Poly& p) {
  for (int j = 1; j <= p.degree(); j += 2) {
    if (sgn(p.coeff(j)) != 0) return false;
  }
  return true;
}

}  // namespace

DiffOp b_airy(const DiffOp& r) {
  if (r.var() != Var::X) throw Error(ErrorCode::VariableMismatch, "b_airy expects an x-side operator");
  return weyl_anti_map(r, airy_operator(Var::Z), Var::Z);
}

DiffOp b_airy_inv(const DiffOp& s) {
  if (s.var() != Var::Z) throw Error(ErrorCode::VariableMismatch, "b_airy_inv expects a z-side operator");
  return weyl_anti_map(s, airy_operator(Var::X), Var::X);
}

BasisDecomp decompose_airy(const DiffOp& r) {
  require_polynomial(r);
  BasisDecomp out;
  Powers lp(airy_operator(r.var()));
  const DiffOp d = DiffOp::derivative(r.var());
  DiffOp rest = r;
  while (!rest.is_zero()) {
    const int k = rest.order();
    const int n = k / 2;
    const bool with_d = k % 2 == 1;
    const DiffOp base = with_d ? d * lp[n] : lp[n];
    const Poly lead = rest.coeff(k).num();
    for (int j = 0; j <= lead.degree(); ++j) {
      if (sgn(lead.coeff(j)) == 0) continue;
      out.coeffs[{j, n, with_d}] += lead.coeff(j);
      rest -= times_power(lead.coeff(j), j, base);
    }
  }
  return out;
}

BasisDecomp decompose_bessel(const DiffOp& r, const Rational& nu) {
  BasisDecomp out;
  Powers lp(bessel_operator(nu, r.var()));
  const DiffOp dx = DiffOp::euler(r.var());
  DiffOp rest = r;
  while (!rest.is_zero()) {
    const int k = rest.order();
    const int n = k / 2;
    const bool with_d = k % 2 == 1;
    const RatFn& c = rest.coeff(k);
    if (!c.is_polynomial()) {
      throw Error(ErrorCode::NotInSubalgebra, "leading coefficient of order " + std::to_string(k) +
                                                  " is not a polynomial");
    }
    Poly lead = c.num();
    if (with_d) {
      if (sgn(lead.coeff(0)) != 0) {
        throw Error(ErrorCode::NotInSubalgebra, "odd-order leading coefficient not divisible by x");
      }
      lead = exactalg::divexact(lead, Poly::x());
    }
    if (!is_even(lead)) {
      throw Error(ErrorCode::NotInSubalgebra, "leading coefficient of order " + std::to_string(k) +
                                                  " has the wrong parity");
    }
    const DiffOp base = with_d ? dx * lp[n] : lp[n];
    for (int j = 0; j <= lead.degree(); j += 2) {
      if (sgn(lead.coeff(j)) == 0) continue;
      out.coeffs[{j / 2, n, with_d}] += lead.coeff(j);
      rest -= times_power(lead.coeff(j), j, base);
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    it = sgn(it->second) == 0 ? out.coeffs.erase(it) : std::next(it);
  }
  return out;
}

DiffOp reconstruct(const BasisDecomp& d, const Family& f) {
  Powers lp(base_operator(f, Var::X));
  const DiffOp step = f.is_airy() ? DiffOp::derivative(Var::X) : DiffOp::euler(Var::X);
  const int xstep = f.is_airy() ? 1 : 2;
  DiffOp out(Var::X);
  for (const auto& [key, c] : d.coeffs) {
    const DiffOp base = key.with_d ? step * lp[key.n] : lp[key.n];
    out += times_power(c, xstep * key.m, base);
  }
  return out;
}

DiffOp b_bessel(const DiffOp& r, const Rational& nu) {
  if (r.var() != Var::X) throw Error(ErrorCode::VariableMismatch, "b_bessel expects an x-side operator");
  const BasisDecomp dec = decompose_bessel(r, nu);
  Powers lz(bessel_operator(nu, Var::Z));
  const DiffOp dz = DiffOp::euler(Var::Z);
  DiffOp out(Var::Z);
  for (const auto& [key, c] : dec.coeffs) {
    const DiffOp tail = key.with_d ? dz * lz[key.m] : lz[key.m];
    out += times_power(c, 2 * key.n, tail);
  }
  return out;
}

DiffOp b_map(const Family& f, const DiffOp& r) {
  return f.is_airy() ? b_airy(r) : b_bessel(r, f.nu);
}

DiffOp b_map_inv(const Family& f, const DiffOp& s) {
  if (f.is_airy()) return b_airy_inv(s);
  // The Bessel map is an involution up to renaming variables.
  return b_bessel(s.retag(Var::X), f.nu).retag(Var::X);
}

}  // namespace prolate::bispectral
