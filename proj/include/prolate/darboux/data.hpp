#pragma once

#include <string>

#include "prolate/bispectral/family.hpp"
#include "prolate/exactalg/diffop.hpp"

namespace prolate::darboux {

using bispectral::Family;
using exactalg::DiffOp;
using exactalg::Poly;
using exactalg::RatFn;
using exactalg::Rational;
using exactalg::Var;

/// Selfadjoint Darboux datum: P = V(x)^{-1} R with V = v (Airy) or
/// V(x) = v(x^2) (Bessel), and the claimed factorization
///   (aP) P = epsilon * F(L),   F(t) = g(t)^2 (Airy), t^m g(t)^2 (Bessel),
/// where t stands for the z-side eigenvalue of L. normalizer is N(z) with
/// N^2 equal to the eigenvalue of F(L) on the base function.
struct DarbouxData {
  Family family;
  DiffOp R{Var::X};
  Poly v = Poly::one();
  Poly g = Poly::one();
  int m = 0;
  Poly normalizer = Poly::one();
  int epsilon = 1;
  /// Set only by certify() after a successful darboux_verify.
  bool verified = false;

  /// V(x) as a polynomial in x.
  Poly v_of_x() const;
  /// P = V^{-1} R.
  DiffOp P() const;
  /// F(t) as a polynomial.
  Poly f_poly() const;
  /// Eigenvalue of F(L) on the base function, as a polynomial in z.
  Poly f_eigenvalue() const;

  static DarbouxData identity(const Family& f);
};

/// Polynomial p applied to an operator: sum_k p_k A^k.
DiffOp poly_of(const Poly& p, const DiffOp& a);

/// YAML text with keys family, R, v, g, m, normalizer, epsilon and, when
/// the datum is certified, verified: true.
std::string to_yaml(const DarbouxData& d);
/// Parses the YAML form. The verified flag is never trusted from text.
DarbouxData from_yaml(const std::string& text);
DarbouxData load_data(const std::string& path);

}  // namespace prolate::darboux
