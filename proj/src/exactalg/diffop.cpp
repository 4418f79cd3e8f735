#include "prolate/exactalg/diffop.hpp"

#include "prolate/error.hpp"

namespace prolate::exactalg {

namespace {

const RatFn& zero_fn() {
  static const RatFn z;
  return z;
}

void check_same_var(const DiffOp& a, const DiffOp& b) {
  if (a.var() != b.var()) {
    throw Error(ErrorCode::VariableMismatch,
                std::string("operators in ") + var_name(a.var()) + " and " + var_name(b.var()));
  }
}

}  // namespace

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

DiffOp DiffOp::function(const RatFn& c, Var var) {
  DiffOp d(var);
  d.add_term(c, 0);
  return d;
}

DiffOp DiffOp::derivative(Var var, int k) {
  DiffOp d(var);
  d.add_term(RatFn(1), k);
  return d;
}

DiffOp DiffOp::term(const RatFn& c, int k, Var var) {
  DiffOp d(var);
  d.add_term(c, k);
  return d;
}

DiffOp DiffOp::euler(Var var) { return term(RatFn(Poly::x()), 1, var); }

const RatFn& DiffOp::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero_fn();
  return c_[static_cast<std::size_t>(k)];
}

bool DiffOp::is_polynomial() const {
  for (const auto& c : c_) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void DiffOp::add_term(const RatFn& c, int k) {
  if (c.is_zero()) return;
  if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k) + 1);
  c_[static_cast<std::size_t>(k)] += c;
  trim();
}

DiffOp DiffOp::pow(unsigned e) const {
  DiffOp result = identity(var_);
  DiffOp base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

DiffOp DiffOp::retag(Var var) const {
  DiffOp d = *this;
  d.var_ = var;
  return d;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    c_ = o.c_;
    var_ = o.var_;
    return *this;
  }
  check_same_var(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp& DiffOp::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (!a.is_zero() && !b.is_zero()) check_same_var(a, b);
  DiffOp r(a.is_zero() ? b.var_ : a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  const int oa = a.order();
  const int ob = b.order();
  // derivs[k][j] = j-th derivative of b's k-th coefficient, j <= oa.
  std::vector<std::vector<RatFn>> derivs(b.c_.size());
  for (std::size_t k = 0; k < b.c_.size(); ++k) {
    if (b.c_[k].is_zero()) continue;
    derivs[k].reserve(static_cast<std::size_t>(oa) + 1);
    derivs[k].push_back(b.c_[k]);
    for (int j = 1; j <= oa; ++j) {
      if (derivs[k].back().is_zero()) break;
      derivs[k].push_back(derivs[k].back().derivative());
    }
  }
  std::vector<RatFn> out(static_cast<std::size_t>(oa + ob) + 1);
  for (int i = 0; i <= oa; ++i) {
    const RatFn& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int k = 0; k <= ob; ++k) {
      const auto& dk = derivs[static_cast<std::size_t>(k)];
      for (int j = 0; j <= i && j < static_cast<int>(dk.size()); ++j) {
        const RatFn& bkj = dk[static_cast<std::size_t>(j)];
        if (bkj.is_zero()) continue;
        RatFn t = ai * bkj;
        if (j > 0) t *= binomial(i, j);
        out[static_cast<std::size_t>(i - j + k)] += t;
      }
    }
  }
  r.c_ = std::move(out);
  r.trim();
  return r;
}

DiffOp operator*(const RatFn& f, const DiffOp& a) {
  DiffOp r(a.var_);
  if (f.is_zero()) return r;
  r.c_ = a.c_;
  for (auto& c : r.c_) c = f * c;
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.var_ == b.var_ && a.c_ == b.c_;
}

DiffOp adjoint(const DiffOp& d) {
  // (-d)^k o c = (-1)^k sum_j C(k,j) c^(j) d^(k-j)
  DiffOp r(d.var());
  if (d.is_zero()) return r;
  std::vector<RatFn> out(d.coeffs().size());
  for (int k = 0; k <= d.order(); ++k) {
    RatFn c = d.coeff(k);
    if (c.is_zero()) continue;
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (int j = 0; j <= k; ++j) {
      if (c.is_zero()) break;
      out[static_cast<std::size_t>(k - j)] += c * (sign * binomial(k, j));
      c = c.derivative();
    }
  }
  for (int k = 0; k < static_cast<int>(out.size()); ++k) r.add_term(out[static_cast<std::size_t>(k)], k);
  return r;
}

DiffOp reflect(const DiffOp& d) {
  DiffOp r(d.var());
  for (int k = 0; k <= d.order(); ++k) {
    const RatFn& c = d.coeff(k);
    if (c.is_zero()) continue;
    RatFn t = c.reflect();
    if (k % 2 == 1) t = -t;
    r.add_term(t, k);
  }
  return r;
}

bool is_formally_symmetric(const DiffOp& d) { return adjoint(d) == d; }

}  // namespace prolate::exactalg
