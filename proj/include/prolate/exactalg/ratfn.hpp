#pragma once

#include <complex>
#include <string>

#include "prolate/exactalg/poly.hpp"

namespace prolate::exactalg {

/// Rational function num/den over Q in lowest terms with a monic
/// denominator, so structural equality is mathematical equality.
class RatFn {
 public:
  RatFn() : den_(Poly::one()) {}
  RatFn(Rational c) : num_(std::move(c)), den_(Poly::one()) {}  // NOLINT
  RatFn(Poly p) : num_(std::move(p)), den_(Poly::one()) {}       // NOLINT
  RatFn(long c) : RatFn(Rational(c)) {}                          // NOLINT
  RatFn(Poly num, Poly den);

  /// x^k for any integer k.
  static RatFn x_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// True when the denominator is a power of x.
  bool is_laurent() const { return den_.is_monomial(); }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  RatFn derivative() const;
  /// f(-x)
  RatFn reflect() const;
  RatFn pow(int e) const;

  /// Throws ErrorCode::Pole when the denominator vanishes at t.
  Rational eval(const Rational& t) const;
  GaussianRational eval(const GaussianRational& t) const;
  std::complex<double> eval(std::complex<double> t) const;
  bool regular_at(const GaussianRational& t) const;

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator*=(const Rational& s);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator-(RatFn a) { return a *= Rational(-1); }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator*(RatFn a, const Rational& s) { return a *= s; }
  friend RatFn operator*(const Rational& s, RatFn a) { return a *= s; }
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// Least common multiple of two monic polynomials.
Poly lcm(const Poly& a, const Poly& b);

}  // namespace prolate::exactalg
