#include "prolate/exactalg/ratfn.hpp"

#include "prolate/error.hpp"

namespace prolate::exactalg {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::Pole, "rational function with zero denominator");
  normalize();
}

RatFn RatFn::x_power(int k) {
  if (k >= 0) return RatFn(Poly::monomial(Rational(1), k));
  RatFn r;
  r.num_ = Poly::one();
  r.den_ = Poly::monomial(Rational(1), -k);
  return r;
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  if (den_.lead() != 1) {
    Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFn RatFn::derivative() const {
  if (is_polynomial()) return RatFn(num_.derivative());
  if (den_.is_monomial()) {
    // (p / x^k)' = (x p' - k p) / x^(k+1)
    const int k = den_.degree();
    Poly top = num_.derivative().shift(1) - num_ * Rational(k);
    return RatFn(std::move(top), Poly::monomial(Rational(1), k + 1));
  }
  Poly top = num_.derivative() * den_ - num_ * den_.derivative();
  return RatFn(std::move(top), den_ * den_);
}

RatFn RatFn::reflect() const {
  return RatFn(num_.reflect(), den_.reflect());
}

RatFn RatFn::pow(int e) const {
  if (e >= 0) {
    RatFn r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
  }
  if (is_zero()) throw Error(ErrorCode::Pole, "negative power of zero");
  return RatFn(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
}

Rational RatFn::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (sgn(d) == 0) throw Error(ErrorCode::Pole, "pole at " + to_string(t));
  return num_.eval(t) / d;
}

GaussianRational RatFn::eval(const GaussianRational& t) const {
  GaussianRational d = den_.eval(t);
  if (d.is_zero()) throw Error(ErrorCode::Pole, "pole at " + to_string(t));
  return num_.eval(t) / d;
}

std::complex<double> RatFn::eval(std::complex<double> t) const {
  if (is_polynomial()) return num_.eval(t) * to_double(den_.coeffs()[0]);
  return num_.eval(t) / den_.eval(t);
}

bool RatFn::regular_at(const GaussianRational& t) const { return !den_.eval(t).is_zero(); }

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = Poly::one();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly left = divexact(o.den_, g);
  Poly right = divexact(den_, g);
  num_ = num_ * left + o.num_ * right;
  den_ = den_ * left;
  normalize();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const Rational& s) {
  num_ *= s;
  if (num_.is_zero()) den_ = Poly::one();
  return *this;
}

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Poly();
    den_ = Poly::one();
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly a = g1.degree() > 0 ? divexact(num_, g1) : num_;
  Poly d = g1.degree() > 0 ? divexact(o.den_, g1) : o.den_;
  Poly c = g2.degree() > 0 ? divexact(o.num_, g2) : o.num_;
  Poly b = g2.degree() > 0 ? divexact(den_, g2) : den_;
  num_ = a * c;
  den_ = b * d;
  if (den_.lead() != 1) {
    Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw Error(ErrorCode::Pole, "division by the zero function");
  RatFn inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  if (inv.den_.lead() != 1) {
    Rational s = 1 / inv.den_.lead();
    inv.num_ *= s;
    inv.den_ *= s;
  }
  return a * inv;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = gcd(a, b);
  return (a * divexact(b, g)).monic();
}

}  // namespace prolate::exactalg
