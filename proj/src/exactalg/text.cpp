#include "prolate/exactalg/text.hpp"

#include <cctype>
#include <optional>

#include "prolate/error.hpp"

namespace prolate::exactalg {

namespace {

/// Scales num/den by one rational so that both have integer coefficients
/// with gcd 1 over the union.
std::pair<Poly, Poly> integer_form(const RatFn& f) {
  mpz_class l = 1;
  for (const auto* p : {&f.num(), &f.den()}) {
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Poly num = f.num() * Rational(l);
  Poly den = f.den() * Rational(l);
  mpz_class g = 0;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g != 0 && g != 1) {
    Rational inv(mpz_class(1), g);
    num *= inv;
    den *= inv;
  }
  return {num, den};
}

class Parser {
 public:
  Parser(const std::string& text, char var) : s_(text), var_(var) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  int integer() { return std::stoi(digits()); }

  /// digits ["/" digits] ["." digits]; the slash is only consumed when a
  /// digit follows, so "(p)/(q)" is left to the caller.
  Rational number() {
    std::string text = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      text += "." + s_.substr(start, pos_ - start);
      return parse_rational(text);
    }
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (peek_digit()) return parse_rational(text + "/" + digits());
    }
    pos_ = save;
    return parse_rational(text);
  }

  bool peek_var() {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == var_;
  }

  /// [number ["*"]] [var ["^" int]]
  Poly poly_term() {
    Rational c(1);
    bool have = false;
    if (peek_digit()) {
      c = number();
      have = true;
      if (accept('*')) {
        if (!peek_var()) fail("expected variable after '*'");
      }
    }
    if (peek_var()) {
      ++pos_;
      int k = 1;
      if (accept('^')) k = integer();
      return Poly::monomial(c, k);
    }
    if (!have) fail("expected polynomial term");
    return Poly(c);
  }

  Poly poly() {
    Poly p;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Poly t = poly_term();
    p += neg ? -t : t;
    while (true) {
      if (accept('+')) p += poly_term();
      else if (accept('-')) p -= poly_term();
      else break;
    }
    return p;
  }

  /// "(" poly ")" ["/" "(" poly ")"] | number
  RatFn rat() {
    if (accept('(')) {
      Poly num = poly();
      expect(')');
      if (accept('/')) {
        expect('(');
        Poly den = poly();
        expect(')');
        if (den.is_zero()) fail("zero denominator");
        return RatFn(num, den);
      }
      return RatFn(num);
    }
    return RatFn(poly_term());
  }

  bool peek_derivative(Var& seen) {
    skip_ws();
    if (pos_ + 1 < s_.size() && s_[pos_] == 'D' && (s_[pos_ + 1] == 'x' || s_[pos_ + 1] == 'z')) {
      seen = s_[pos_ + 1] == 'x' ? Var::X : Var::Z;
      return true;
    }
    return false;
  }

  int derivative_power() {
    pos_ += 2;
    if (accept('^')) return integer();
    return 1;
  }

  void term(DiffOp& out, bool neg, std::optional<Var>& var) {
    Var seen = Var::X;
    RatFn c(1);
    int k = 0;
    if (peek_derivative(seen)) {
      k = derivative_power();
      note_var(seen, var);
    } else {
      c = rat();
      if (accept('*')) {
        if (!peek_derivative(seen)) fail("expected Dx or Dz");
        k = derivative_power();
        note_var(seen, var);
      }
    }
    out.add_term(neg ? -c : c, k);
  }

  void note_var(Var seen, std::optional<Var>& var) {
    if (var && *var != seen) fail("mixed Dx and Dz");
    var = seen;
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  char var_;
  std::size_t pos_ = 0;
};

/// Guesses the operator variable from the first Dx/Dz or polynomial symbol.
char detect_var(const std::string& text) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == 'D' && (text[i + 1] == 'x' || text[i + 1] == 'z')) return text[i + 1];
  }
  for (char c : text) {
    if (c == 'x' || c == 'z') return c;
  }
  return 'x';
}

}  // namespace

std::string to_text(const RatFn& f, char var) {
  auto [num, den] = integer_form(f);
  std::string out = "(" + to_string(num, var) + ")";
  if (!(den.degree() == 0 && den.lead() == 1)) out += "/(" + to_string(den, var) + ")";
  return out;
}

std::string to_text(const DiffOp& d) {
  if (d.is_zero()) return "0";
  const char v = var_name(d.var());
  std::string out;
  for (int k = d.order(); k >= 0; --k) {
    const RatFn& c = d.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += to_text(c, v);
    if (k > 0) out += std::string(" * D") + v + "^" + std::to_string(k);
  }
  return out;
}

DiffOp parse_diffop(const std::string& text) {
  const char v = detect_var(text);
  Parser p(text, v);
  DiffOp out(v == 'x' ? Var::X : Var::Z);
  std::optional<Var> var;
  if (p.at_end()) p.fail("empty operator");
  bool neg = false;
  if (p.accept('-')) neg = true;
  else p.accept('+');
  p.term(out, neg, var);
  while (!p.at_end()) {
    if (p.accept('+')) p.term(out, false, var);
    else if (p.accept('-')) p.term(out, true, var);
    else p.fail("expected '+' or '-'");
  }
  if (out.is_zero()) return DiffOp(v == 'x' ? Var::X : Var::Z);
  return out;
}

DiffOp parse_diffop(const std::string& text, Var expected) {
  DiffOp d = parse_diffop(text);
  if (d.is_zero()) return DiffOp(expected);
  if (d.var() != expected) {
    throw Error(ErrorCode::Parse, std::string("operator '") + text + "' is not in " + var_name(expected));
  }
  return d;
}

Poly parse_poly(const std::string& text, char var) {
  Parser p(text, var);
  Poly out = p.poly();
  if (!p.at_end()) p.fail("trailing input");
  return out;
}

RatFn parse_ratfn(const std::string& text, char var) {
  Parser p(text, var);
  RatFn out = p.rat();
  if (!p.at_end()) p.fail("trailing input");
  return out;
}

}  // namespace prolate::exactalg
