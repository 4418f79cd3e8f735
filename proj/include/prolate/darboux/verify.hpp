#pragma once

#include <optional>
#include <string>

#include "prolate/darboux/data.hpp"
#include "prolate/error.hpp"

namespace prolate::darboux {

struct Certificate {
  /// Empty when every check passed.
  std::optional<ErrorCode> failure;
  std::string message;
  /// (aP)P - epsilon F(L); zero on success.
  DiffOp residual{Var::X};
  int epsilon = 1;
  /// Whether epsilon agrees with (-1)^m (Bessel only; true for Airy).
  bool epsilon_is_parity = true;
  int rho1 = 0;
  int rho2 = 0;
  DiffOp bR{Var::Z};

  bool ok() const { return !failure; }
};

/// Exact checks: F shape (g(0) != 0 for Bessel), N^2 = eigenvalue of F,
/// (aP)P = epsilon F(L), membership of R in the algebra carrying the b-map,
/// and P(-x,-d) = P(x,d) in even mode. Never throws on a failed check.
Certificate darboux_verify(const DarbouxData& d);

/// Runs darboux_verify and marks the datum verified on success; throws the
/// failure code otherwise.
Certificate certify(DarbouxData& d);

struct DualPresentation {
  DiffOp bR{Var::Z};
  /// eps' in v(L(z))^2 = eps' a(bR) N^-2 bR.
  int epsilon = 1;
};

/// Checks the z-side identity; throws UnverifiedData or
/// DualFactorizationFails.
DualPresentation dual_presentation(const DarbouxData& d);

/// Square root in Q[t] if one exists (leading coefficient positive).
std::optional<Poly> poly_sqrt(const Poly& p);

}  // namespace prolate::darboux
