#pragma once

#include <map>
#include <tuple>

#include "prolate/bispectral/family.hpp"

namespace prolate::bispectral {

/// Basis element x^m [d] L^n (Airy) or x^{2m} [D_x] L_nu^n (Bessel), where
/// D_x = x d is the Euler operator.
struct BasisKey {
  int m = 0;
  int n = 0;
  bool with_d = false;

  friend bool operator<(const BasisKey& a, const BasisKey& b) {
    return std::tie(a.n, a.m, a.with_d) < std::tie(b.n, b.m, b.with_d);
  }
  friend bool operator==(const BasisKey& a, const BasisKey& b) {
    return a.m == b.m && a.n == b.n && a.with_d == b.with_d;
  }
};

struct BasisDecomp {
  std::map<BasisKey, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
};

/// Anti-isomorphism of the Weyl algebra with x -> L_A(z), d_x -> d_z.
/// Throws NonPolynomial for non-polynomial coefficients.
DiffOp b_airy(const DiffOp& r);
/// Inverse map z -> L_A(x), d_z -> d_x.
DiffOp b_airy_inv(const DiffOp& s);

BasisDecomp decompose_airy(const DiffOp& r);
BasisDecomp decompose_bessel(const DiffOp& r, const Rational& nu);
DiffOp reconstruct(const BasisDecomp& d, const Family& f);

/// x^2 -> L_nu(z), D_x -> D_z, L_nu(x) -> z^2. Throws NotInSubalgebra.
DiffOp b_bessel(const DiffOp& r, const Rational& nu);

/// Dispatches to b_airy or b_bessel.
DiffOp b_map(const Family& f, const DiffOp& r);
/// Inverse image of a z-side operator (Airy only; Bessel by decomposition
/// on the z side).
DiffOp b_map_inv(const Family& f, const DiffOp& s);

}  // namespace prolate::bispectral
