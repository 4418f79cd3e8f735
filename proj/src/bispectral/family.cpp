#include "prolate/bispectral/family.hpp"

#include "prolate/error.hpp"

namespace prolate::bispectral {

using exactalg::Poly;
using exactalg::RatFn;

Family Family::parse(const std::string& text) {
  if (text == "airy") return airy();
  const std::string prefix = "bessel:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      return bessel(exactalg::parse_rational(text.substr(prefix.size())));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::Config, "unknown family '" + text + "'");
}

std::string Family::to_string() const {
  if (is_airy()) return "airy";
  return "bessel:" + nu.get_num().get_str() + "/" + nu.get_den().get_str();
}

DiffOp airy_operator(Var var) {
  DiffOp l = DiffOp::derivative(var, 2);
  l.add_term(RatFn(-Poly::x()), 0);
  return l;
}

DiffOp bessel_operator(const Rational& nu, Var var) {
  DiffOp l = DiffOp::derivative(var, 2);
  l.add_term(RatFn(-nu * (nu + 1)) * RatFn::x_power(-2), 0);
  return l;
}

DiffOp base_operator(const Family& f, Var var) {
  return f.is_airy() ? airy_operator(var) : bessel_operator(f.nu, var);
}

}  // namespace prolate::bispectral
