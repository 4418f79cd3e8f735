#include "prolate/exactalg/poly.hpp"

#include <algorithm>

#include "prolate/error.hpp"

namespace prolate::exactalg {

Poly::Poly(Rational c) {
  if (sgn(c) != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, int degree) {
  Poly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::derivative() const {
  Poly d;
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * static_cast<long>(i);
  d.trim();
  return d;
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  Poly m = *this;
  Rational inv = 1 / c_.back();
  for (auto& c : m.c_) c *= inv;
  return m;
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::of_square() const {
  Poly r;
  if (c_.empty()) return r;
  r.c_.assign(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
  return r;
}

Poly Poly::shift(int k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

GaussianRational Poly::eval(const GaussianRational& t) const {
  if (t.is_real()) return GaussianRational(eval(t.re));
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + GaussianRational(*it);
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::Pole, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  Rational inv_lead = 1 / b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_monomial()) {
    // x^k * c: shift down.
    const int k = b.degree();
    if (a.is_zero()) return Poly();
    if (a.valuation() < k) {
      throw Error(ErrorCode::Pole, "inexact polynomial division");
    }
    std::vector<Rational> c(a.coeffs().begin() + k, a.coeffs().end());
    Poly q(std::move(c));
    return q * (1 / b.lead());
  }
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::Pole, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly::one();
  if (a.is_monomial() || b.is_monomial()) {
    return Poly::monomial(Rational(1), std::min(a.valuation(), b.valuation()));
  }
  Poly u = a.monic();
  Poly v = b.monic();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace prolate::exactalg
