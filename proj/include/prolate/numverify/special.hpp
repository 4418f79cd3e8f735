#pragma once

#include <complex>

namespace prolate::numverify {

using cplx = std::complex<double>;

struct AiryValue {
  cplx ai;
  cplx aip;
};

/// Ai and Ai' at complex w. Maclaurin series for |w| <= 2.5, the large-|w|
/// expansion for |w| >= 12 with |arg w| < 2pi/3, and Taylor stepping of
/// A'' = wA in between. Throws Overflow for |w| > 60.
AiryValue eval_airy(cplx w);

/// Value and x-derivative of Psi_nu(x, z) = c x^{nu+1} z^{nu+1} G(x^2 z^2),
/// c = i^{nu+1/2} 2^{-nu-1/2}, G(u) = sum (u/4)^k / (k! Gamma(k+nu+3/2)),
/// with principal powers taken separately in x and z. For positive x, z
/// this equals (xz)^{1/2} J_{nu+1/2}(ixz). Throws NonConvergence.
struct PsiValue {
  cplx value;
  cplx dx;
};
PsiValue eval_bessel_psi(double nu, cplx x, cplx z);

/// Second solution x^{1/2} z^{1/2} K_{nu+1/2}(xz) of the same pair of ODEs,
/// with log(xz) split as log x + log z. For nu + 1/2 outside the integers
/// this is Psi_{-nu-1} (up to a constant); for integer order it uses the
/// logarithmic series of K_n.
PsiValue eval_bessel_psi_second(double nu, cplx x, cplx z);

/// One Taylor step for A'' = (w0 + h) A from (a, a') at w0, returning the
/// value and derivative at w0 + h.
AiryValue airy_taylor_step(cplx w0, AiryValue at_w0, cplx h);

}  // namespace prolate::numverify
