#pragma once

#include <string>

#include "prolate/exactalg/diffop.hpp"

namespace prolate::exactalg {

// Canonical operator text:
//   op   := "0" | term (" + " term)*
//   term := rat [" * D" var "^" k]      (k >= 1, descending k)
//   rat  := "(" poly ")" ["/(" poly ")"]
// Numerator and denominator carry coprime-content integer coefficients with
// a positive leading denominator coefficient; polynomials print in
// descending powers. The parser is lenient about spacing, signs, omitted
// coefficients and rational coefficients inside polynomials.

std::string to_text(const DiffOp& d);
std::string to_text(const RatFn& f, char var = 'x');
DiffOp parse_diffop(const std::string& text);
/// Parses an operator and checks its variable tag.
DiffOp parse_diffop(const std::string& text, Var expected);
Poly parse_poly(const std::string& text, char var);
RatFn parse_ratfn(const std::string& text, char var);

}  // namespace prolate::exactalg
