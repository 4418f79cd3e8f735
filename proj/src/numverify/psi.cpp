#include "prolate/numverify/psi.hpp"

#include <cmath>

#include "prolate/darboux/verify.hpp"
#include "prolate/error.hpp"
#include "prolate/numverify/special.hpp"

namespace prolate::numverify {

using exactalg::DiffOp;
using exactalg::Poly;
using exactalg::RatFn;
using exactalg::Var;

BaseFunction BaseFunction::of(const bispectral::Family& f) {
  if (f.is_airy()) return {Kind::Airy, 0.0};
  return {Kind::Bessel, exactalg::to_double(f.nu)};
}

cplx BaseFunction::value(cplx x, cplx z) const { return jets_x(x, z, 0)[0]; }

std::vector<cplx> BaseFunction::jets_x(cplx x, cplx z, int n) const {
  std::vector<cplx> f(std::max(n, 1) + 1);
  switch (kind) {
    case Kind::ExpPlus:
    case Kind::ExpMinus: {
      const cplx s = kind == Kind::ExpPlus ? z : -z;
      f[0] = std::exp(s * x);
      for (std::size_t j = 1; j < f.size(); ++j) f[j] = f[j - 1] * s;
      break;
    }
    case Kind::Airy: {
      const AiryValue a = eval_airy(x + z);
      f[0] = a.ai;
      f[1] = a.aip;
      // f^(j+2) = (x+z) f^(j) + j f^(j-1)
      for (std::size_t j = 0; j + 2 < f.size(); ++j)
        f[j + 2] = (x + z) * f[j] + (j > 0 ? static_cast<double>(j) * f[j - 1] : 0.0);
      break;
    }
    case Kind::Bessel:
    case Kind::BesselSecond: {
      if (x == 0.0) throw Error(ErrorCode::Pole, "Bessel base function at x = 0");
      const PsiValue p = kind == Kind::Bessel ? eval_bessel_psi(nu, x, z) : eval_bessel_psi_second(nu, x, z);
      f[0] = p.value;
      f[1] = p.dx;
      // r = z^2 + c x^-2, r^(i) = c (-1)^i (i+1)! x^(-2-i) for i >= 1
      const double c = nu * (nu + 1.0);
      std::vector<cplx> r(f.size());
      r[0] = z * z + c / (x * x);
      double fact = 1.0;
      for (std::size_t i = 1; i < r.size(); ++i) {
        fact *= static_cast<double>(i + 1);
        r[i] = c * (i % 2 ? -1.0 : 1.0) * fact * std::pow(x, -2.0 - static_cast<double>(i));
      }
      for (std::size_t j = 0; j + 2 < f.size(); ++j) {
        cplx s = 0.0;
        double binom = 1.0;
        for (std::size_t i = 0; i <= j; ++i) {
          s += binom * r[i] * f[j - i];
          binom = binom * static_cast<double>(j - i) / static_cast<double>(i + 1);
        }
        f[j + 2] = s;
      }
      break;
    }
  }
  f.resize(n + 1);
  return f;
}

PsiEvaluator::PsiEvaluator(const darboux::DarbouxData& d) : PsiEvaluator(d, BaseFunction::of(d.family)) {}

PsiEvaluator::PsiEvaluator(const darboux::DarbouxData& d, BaseFunction base) : d_(d), base_(base) {
  identity_ = x_action(DiffOp::identity(Var::X));
}

PsiAction PsiEvaluator::x_action(const DiffOp& T) const {
  if (T.var() != Var::X) throw Error(ErrorCode::VariableMismatch, "x-side action needs an operator in x");
  return {T * d_.P(), d_.normalizer, false};
}

PsiAction PsiEvaluator::z_action(const DiffOp& S) const {
  if (S.var() != Var::Z) throw Error(ErrorCode::VariableMismatch, "z-side action needs an operator in z");
  const DiffOp bR = darboux::dual_presentation(d_).bR;
  const DiffOp inner = RatFn(Poly::one(), d_.normalizer) * bR;
  return {S * inner, d_.v_of_x(), true};
}

namespace {

cplx checked_divisor(const Poly& p, cplx t) {
  const cplx v = p.eval(t);
  if (std::abs(v) == 0.0 || !std::isfinite(std::abs(v)))
    throw Error(ErrorCode::Pole, "evaluation at a root of v or of the normalizer");
  return v;
}

std::vector<cplx> coeffs_at(const DiffOp& op, cplx t) {
  std::vector<cplx> c;
  for (const auto& r : op.coeffs()) {
    const cplx den = r.den().eval(t);
    if (std::abs(den) == 0.0) throw Error(ErrorCode::Pole, "coefficient pole at evaluation point");
    c.push_back(r.num().eval(t) / den);
  }
  return c;
}

cplx contract(const std::vector<cplx>& c, const std::vector<cplx>& jets) {
  cplx s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * jets[k];
  return s;
}

}  // namespace

cplx PsiEvaluator::apply(const PsiAction& a, cplx x, cplx z) const {
  if (a.op.is_zero()) return 0.0;
  const int n = a.op.order();
  if (!a.z_side) {
    const cplx div = checked_divisor(a.divisor, z);
    checked_divisor(d_.v_of_x(), x);
    return contract(coeffs_at(a.op, x), base_.jets_x(x, z, n)) / div;
  }
  const cplx div = checked_divisor(a.divisor, x);
  checked_divisor(d_.normalizer, z);
  return contract(coeffs_at(a.op, z), base_.jets_z(x, z, n)) / div;
}

std::vector<cplx> PsiEvaluator::apply_row(const PsiAction& a, cplx x, const std::vector<cplx>& zs) const {
  std::vector<cplx> out(zs.size(), 0.0);
  if (a.op.is_zero()) return out;
  if (a.z_side) {
    for (std::size_t q = 0; q < zs.size(); ++q) out[q] = apply(a, x, zs[q]);
    return out;
  }
  const int n = a.op.order();
  checked_divisor(d_.v_of_x(), x);
  const std::vector<cplx> c = coeffs_at(a.op, x);
  for (std::size_t q = 0; q < zs.size(); ++q)
    out[q] = contract(c, base_.jets_x(x, zs[q], n)) / checked_divisor(a.divisor, zs[q]);
  return out;
}

cplx PsiEvaluator::value(cplx x, cplx z) const { return apply(identity_, x, z); }

cplx eval_psi(const darboux::DarbouxData& d, cplx x, cplx z) { return PsiEvaluator(d).value(x, z); }

}  // namespace prolate::numverify
