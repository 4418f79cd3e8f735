#pragma once

#include <optional>
#include <vector>

#include "prolate/darboux/verify.hpp"

namespace prolate::darboux {

/// Two-sided ladder datum: P = (d - (nu+steps)/x) ... (d - (nu+1)/x),
/// R = x^steps P, v(t) = t^{steps/2}, g = 1, m = steps, N = z^steps,
/// epsilon = +1. Odd steps throw EvennessViolation.
DarbouxData ladder(const Rational& nu, int steps);

/// A kernel function of P: either x^alpha q(x), or the jet
/// q(d_lambda) A(x + lambda) of a generic Airy solution A.
struct Seed {
  enum class Kind { QuasiRational, AiryJet };

  Kind kind = Kind::QuasiRational;
  Rational alpha{0};
  Rational lambda{0};
  Poly q = Poly::one();

  static Seed quasi_rational(Rational alpha, Poly q) {
    return {Kind::QuasiRational, std::move(alpha), Rational(0), std::move(q)};
  }
  static Seed airy_jet(Rational lambda, Poly q) {
    return {Kind::AiryJet, Rational(0), std::move(lambda), std::move(q)};
  }
};

struct KernelResult {
  /// Monic annihilator of all seeds.
  DiffOp P{Var::X};
  /// Packaged datum (R = V P with V even for Bessel); present when (aP)P
  /// has the selfadjoint shape.
  std::optional<DarbouxData> data;
  Certificate certificate;
};

/// Builds the monic P killing every seed by solving the annihilation
/// conditions over Q(x), then packages and verifies. Throws SeedsDependent
/// and NonRationalCoefficients; verification failures are reported.
KernelResult darboux_from_kernel(const Family& family, const std::vector<Seed>& seeds);

}  // namespace prolate::darboux
