#pragma once

#include <limits>
#include <vector>

#include "prolate/exactalg/ratfn.hpp"

namespace prolate::exactalg {

enum class Var { X, Z };

inline char var_name(Var v) { return v == Var::X ? 'x' : 'z'; }

/// Order reported for the zero operator.
inline constexpr int kZeroOrder = std::numeric_limits<int>::min() / 2;

/// Differential operator sum_k c_k(v) d_v^k with rational-function
/// coefficients, kept in coefficients-on-the-left normal form.
class DiffOp {
 public:
  explicit DiffOp(Var var = Var::X) : var_(var) {}

  static DiffOp identity(Var var) { return function(RatFn(1), var); }
  static DiffOp function(const RatFn& c, Var var);
  /// d_v^k
  static DiffOp derivative(Var var, int k = 1);
  static DiffOp term(const RatFn& c, int k, Var var);
  /// Euler operator v d_v.
  static DiffOp euler(Var var);

  Var var() const { return var_; }
  int order() const { return c_.empty() ? kZeroOrder : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFn& coeff(int k) const;
  const std::vector<RatFn>& coeffs() const { return c_; }
  /// All coefficients are polynomials.
  bool is_polynomial() const;

  void add_term(const RatFn& c, int k);

  DiffOp pow(unsigned e) const;
  /// Same coefficients, other variable tag.
  DiffOp retag(Var var) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Rational& s);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(DiffOp a) { return a *= Rational(-1); }
  friend DiffOp operator*(DiffOp a, const Rational& s) { return a *= s; }
  friend DiffOp operator*(const Rational& s, DiffOp a) { return a *= s; }
  /// Composition, normal-ordered by the Leibniz rule.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  /// Left multiplication by a function (no Leibniz terms).
  friend DiffOp operator*(const RatFn& f, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b);
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

 private:
  void trim();
  Var var_;
  std::vector<RatFn> c_;
};

/// Formal adjoint sum_k (-d)^k o c_k, renormalized.
DiffOp adjoint(const DiffOp& d);
/// Image under v -> -v: c_k(v) d^k -> c_k(-v) (-d)^k.
DiffOp reflect(const DiffOp& d);
bool is_formally_symmetric(const DiffOp& d);
/// Binomial coefficient as an exact rational.
Rational binomial(int n, int k);

}  // namespace prolate::exactalg
