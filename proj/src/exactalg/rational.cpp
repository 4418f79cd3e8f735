#include "prolate/exactalg/rational.hpp"

#include <cctype>

#include "prolate/error.hpp"

namespace prolate::exactalg {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  // Accept plain decimals such as "0.25" by converting them exactly.
  if (auto dot = s.find('.'); dot != std::string::npos) {
    bool neg = s.front() == '-';
    std::string body = neg ? s.substr(1) : s;
    dot = body.find('.');
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    if (digits.empty()) throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
      }
    }
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < body.size(); ++i) den *= 10;
    Rational q{mpz_class(digits, 10), den};
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational norm = b.re * b.re + b.im * b.im;
  if (sgn(norm) == 0) throw Error(ErrorCode::Pole, "division by zero in Q(i)");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "*i";
  std::string im = to_string(z.im);
  return to_string(z.re) + (sgn(z.im) < 0 ? " - " + im.substr(1) : " + " + im) + "*i";
}

}  // namespace prolate::exactalg
