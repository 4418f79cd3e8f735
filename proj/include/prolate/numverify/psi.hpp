#pragma once

#include <complex>
#include <vector>

#include "prolate/darboux/data.hpp"
#include "prolate/exactalg/diffop.hpp"

namespace prolate::numverify {

using cplx = std::complex<double>;

/// Ai(x+z), Psi_nu(x, z), its second-kind partner, or e^{+-xz}. Each is symmetric in x and z and
/// satisfies a second-order ODE in either variable, which gives all jets
/// from the value and first derivative.
struct BaseFunction {
  enum class Kind { Airy, Bessel, BesselSecond, ExpPlus, ExpMinus };
  Kind kind = Kind::Airy;
  double nu = 0.0;

  static BaseFunction of(const bispectral::Family& f);

  cplx value(cplx x, cplx z) const;
  /// d^j/dx^j at fixed z for j = 0..n.
  std::vector<cplx> jets_x(cplx x, cplx z, int n) const;
  std::vector<cplx> jets_z(cplx x, cplx z, int n) const { return jets_x(z, x, n); }
};

/// An operator applied to Psi = N(z)^-1 P Psi_base, prepared so that only
/// jets of the base function are needed.
struct PsiAction {
  /// T*P on the x side, or S*N^-1*bR on the z side.
  exactalg::DiffOp op{exactalg::Var::X};
  /// N(z) for x-side actions, V(x) for z-side ones.
  exactalg::Poly divisor;
  bool z_side = false;
};

class PsiEvaluator {
 public:
  explicit PsiEvaluator(const darboux::DarbouxData& d);
  PsiEvaluator(const darboux::DarbouxData& d, BaseFunction base);

  const BaseFunction& base() const { return base_; }
  const darboux::DarbouxData& data() const { return d_; }

  /// T acting in x on Psi.
  PsiAction x_action(const exactalg::DiffOp& T) const;
  /// S acting in z on Psi; uses V Psi = N^-1 bR Psi_base.
  PsiAction z_action(const exactalg::DiffOp& S) const;

  /// Throws Pole at a root of v or of the normalizer.
  cplx apply(const PsiAction& a, cplx x, cplx z) const;
  /// apply(a, x, z_q) for every q, evaluating coefficients once when the
  /// action is on the x side.
  std::vector<cplx> apply_row(const PsiAction& a, cplx x, const std::vector<cplx>& zs) const;

  cplx value(cplx x, cplx z) const;

 private:
  darboux::DarbouxData d_;
  BaseFunction base_;
  PsiAction identity_;
};

/// (1/N(z)) P(x, d_x) Psi_base(x, z).
cplx eval_psi(const darboux::DarbouxData& d, cplx x, cplx z);

}  // namespace prolate::numverify
