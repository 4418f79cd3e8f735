#pragma once

#include <string>

#include "prolate/exactalg/diffop.hpp"

namespace prolate::bispectral {

using exactalg::DiffOp;
using exactalg::Rational;
using exactalg::Var;

struct Family {
  enum class Kind { Airy, Bessel };

  Kind kind = Kind::Airy;
  Rational nu{0};

  static Family airy() { return {}; }
  static Family bessel(Rational nu) { return {Kind::Bessel, std::move(nu)}; }
  /// "airy" or "bessel:<num>/<den>" (a plain integer or decimal is accepted).
  static Family parse(const std::string& text);

  bool is_airy() const { return kind == Kind::Airy; }
  bool is_bessel() const { return kind == Kind::Bessel; }
  bool nu_integer() const { return is_bessel() && nu.get_den() == 1; }
  int rank() const { return nu_integer() ? 1 : 2; }
  bool even_mode() const { return nu_integer(); }
  std::string to_string() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.kind == b.kind && (a.is_airy() || a.nu == b.nu);
  }
};

/// L_A = d^2 - v
DiffOp airy_operator(Var var);
/// L_nu = d^2 - nu(nu+1)/v^2
DiffOp bessel_operator(const Rational& nu, Var var);
/// The operator L of the family in the given variable.
DiffOp base_operator(const Family& f, Var var);

}  // namespace prolate::bispectral
