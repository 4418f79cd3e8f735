#pragma once

#include <complex>
#include <vector>

#include "prolate/exactalg/diffop.hpp"

namespace prolate::exactalg {

/// Bilinear form sum_{j,i} B[j][i] f^(j)(xi) g^(i)(xi) produced by
/// integrating (D f) g by parts up to the point xi.
struct JetForm {
  GaussianRational point;
  std::vector<std::vector<GaussianRational>> B;  // B[j][i]

  bool is_zero() const;
  int size() const { return static_cast<int>(B.size()); }
  /// Evaluates the form on numeric jets f^(j)(xi), g^(i)(xi).
  std::complex<double> apply(const std::vector<std::complex<double>>& f_jets,
                             const std::vector<std::complex<double>>& g_jets) const;
};

/// phi_xi(D): for D = sum_k b_k d^k,
///   sum_k sum_{i<k} (-1)^i f^(k-i-1)(xi) (d^i (b_k g))(xi),
/// with d^i(b_k g) expanded into jets of g. Throws Pole if some b_k is
/// singular at xi.
JetForm boundary_form(const DiffOp& d, const GaussianRational& xi);

/// Coefficients [c_0, ..., c_n] of a formally symmetric operator written as
/// D = sum_i d^i c_i d^i. The index on both derivatives is i.
struct SymForm {
  std::vector<RatFn> c;

  int n() const { return static_cast<int>(c.size()) - 1; }
  DiffOp reconstruct(Var var) const;
};

/// d^n c d^n normal-ordered.
DiffOp sandwich(const RatFn& c, int n, Var var);

/// Peels D from the top: c_n is the leading coefficient of order 2n, then
/// D - d^n c_n d^n is handled recursively. Throws NotSymmetric if a(D) != D.
SymForm symmetric_form(const DiffOp& d);

/// The condition (d^i c_k)(xi) = 0.
struct JetCondition {
  int k = 0;
  int i = 0;
  GaussianRational point;

  GaussianRational value(const SymForm& sf) const;
};

/// Conditions (d^i c_k)(xi) = 0 for k = 1..n, i = 0..k-1; their joint
/// vanishing is equivalent to phi_xi(D) = 0. Throws Pole if some c_k is
/// singular at xi.
std::vector<JetCondition> jet_constraints(const SymForm& sf, const GaussianRational& xi);

/// Values of the conditions for a form padded to n_max, in the order of
/// jet_constraints (k ascending, then i ascending).
std::vector<GaussianRational> jet_values(const SymForm& sf, const GaussianRational& xi, int n_max);

bool jet_conditions_hold(const SymForm& sf, const GaussianRational& xi);

}  // namespace prolate::exactalg
