#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "prolate/exactalg/rational.hpp"

namespace prolate::exactalg {

/// Dense univariate polynomial over Q, coefficients stored low to high.
/// The coefficient vector is always trimmed, so the zero polynomial is the
/// empty vector and degree() == -1 for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(Rational c, int degree);
  static Poly x() { return monomial(Rational(1), 1); }
  static Poly one() { return Poly(Rational(1)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Single nonzero term c*x^k.
  bool is_monomial() const;
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lead() const { return c_.back(); }

  Poly derivative() const;
  Poly monic() const;
  /// p(-x)
  Poly reflect() const;
  /// p(x^2)
  Poly of_square() const;
  /// x^k p(x)
  Poly shift(int k) const;
  Poly pow(unsigned e) const;

  Rational eval(const Rational& t) const;
  GaussianRational eval(const GaussianRational& t) const;
  std::complex<double> eval(std::complex<double> t) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact division, asserting a zero remainder.
Poly divexact(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Human-readable form in the given variable, descending powers, e.g.
/// "3*x^2 - 1/2*x + 1".
std::string to_string(const Poly& p, char var = 'x');

}  // namespace prolate::exactalg
