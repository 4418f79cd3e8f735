#include <random>

#include "doctest.h"
#include "prolate/error.hpp"
#include "prolate/exactalg/linalg.hpp"
#include "prolate/exactalg/symmetric.hpp"
#include "prolate/exactalg/text.hpp"
#include "../support/random_ops.hpp"

using namespace prolate;
using namespace prolate::exactalg;
using prolate::testing::apply;
using prolate::testing::random_op;
using prolate::testing::random_rational_op;
using prolate::testing::same_action;

namespace {

DiffOp op(const std::string& s) { return parse_diffop(s); }
const DiffOp kD = DiffOp::derivative(Var::X);
const DiffOp kX = DiffOp::function(RatFn(Poly::x()), Var::X);

DiffOp euler_shift(const Rational& s) {
  return DiffOp::euler(Var::X) + DiffOp::function(RatFn(s), Var::X);
}

DiffOp bessel_l(const Rational& nu) {
  return kD * kD - DiffOp::function(RatFn(nu * (nu + 1)) * RatFn::x_power(-2), Var::X);
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("poly gcd and division") {
  const Poly a = parse_poly("x^3 - x", 'x');
  const Poly b = parse_poly("x^2 + 2*x + 1", 'x');
  CHECK(gcd(a, b) == parse_poly("x + 1", 'x'));
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
}

TEST_CASE("leibniz product") {
  CHECK(kD * kX == op("(x) * Dx^1 + (1)"));
  const Rational nu(1, 3);
  const DiffOp xinv = DiffOp::function(RatFn::x_power(-1), Var::X);
  CHECK(xinv * euler_shift(nu + 1) * xinv * euler_shift(-nu - 1) == bessel_l(nu));
  const DiffOp x2 = DiffOp::function(RatFn::x_power(2), Var::X);
  CHECK(kX * euler_shift(-nu - 1) * xinv * euler_shift(nu + 1) == x2 * bessel_l(nu + 1));
  CHECK_THROWS_AS(kD * DiffOp::derivative(Var::Z), Error);
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(kD) == -kD);
  CHECK(adjoint(op("(x) * Dx^2")) == op("(x) * Dx^2 + (2) * Dx^1"));
  const DiffOp la = op("(1) * Dx^2 + (-x)");
  CHECK(adjoint(la) == la);
}

TEST_CASE("adjoint properties on random operators") {
  std::mt19937 rng(11);
  for (int t = 0; t < 120; ++t) {
    const DiffOp a = random_op(rng, 6, 4);
    const DiffOp b = random_op(rng, 4, 3);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
  for (int t = 0; t < 30; ++t) {
    const DiffOp a = random_rational_op(rng, 3, 2);
    CHECK(adjoint(adjoint(a)) == a);
  }
}

TEST_CASE("product agrees with composed action") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    const DiffOp a = random_rational_op(rng, 3, 2);
    const DiffOp b = random_op(rng, 3, 2);
    const DiffOp ab = a * b;
    for (int j = 0; j < 8; ++j) {
      const RatFn f(Poly::monomial(Rational(1), j));
      CHECK(apply(ab, f) == apply(a, apply(b, f)));
    }
    CHECK(same_action(ab, ab, 3));
  }
}

TEST_CASE("boundary form examples") {
  CHECK(boundary_form(kX, Rational(3)).is_zero());
  const JetForm f2 = boundary_form(kD * kD, Rational(0));
  REQUIRE(f2.size() == 2);
  CHECK(f2.B[1][0] == Rational(1));
  CHECK(f2.B[0][1] == Rational(-1));
  CHECK(f2.B[0][0].is_zero());
  CHECK(f2.B[1][1].is_zero());
  const JetForm f1 = boundary_form(kD, Rational(1));
  REQUIRE(f1.size() == 1);
  CHECK(f1.B[0][0] == Rational(1));
  CHECK_THROWS_AS(boundary_form(op("(1)/(x) * Dx^1"), Rational(0)), Error);
}

TEST_CASE("symmetric form examples") {
  SymForm s = symmetric_form(kD * kD);
  REQUIRE(s.c.size() == 2);
  CHECK(s.c[0].is_zero());
  CHECK(s.c[1] == RatFn(1));

  const DiffOp prolate = kD * DiffOp::function(RatFn(parse_poly("1 - x^2", 'x')), Var::X) * kD -
                         DiffOp::function(RatFn(parse_poly("4*x^2", 'x')), Var::X);
  s = symmetric_form(prolate);
  REQUIRE(s.c.size() == 2);
  CHECK(s.c[0] == RatFn(parse_poly("-4*x^2", 'x')));
  CHECK(s.c[1] == RatFn(parse_poly("1 - x^2", 'x')));

  try {
    symmetric_form(DiffOp::euler(Var::X));
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("jet constraint examples") {
  SymForm s{{RatFn(1), RatFn(Poly::x())}};
  CHECK(jet_constraints(s, Rational(2)).size() == 1);
  s.c.push_back(RatFn(1));
  const auto cs = jet_constraints(s, Rational(0));
  REQUIRE(cs.size() == 3);
  CHECK((cs[0].k == 1 && cs[0].i == 0));
  CHECK((cs[1].k == 2 && cs[1].i == 0));
  CHECK((cs[2].k == 2 && cs[2].i == 1));
  CHECK(jet_constraints(SymForm{{RatFn(Poly::x())}}, Rational(0)).empty());
}

TEST_CASE("random symmetric operators: reconstruction and boundary equivalence") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> pick(0, 3);
  int vanishing = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + pick(rng) % 3;
    const Rational xi(pick(rng) - 1);
    SymForm sf;
    for (int k = 0; k <= n; ++k) {
      Poly c = prolate::testing::random_poly(rng, 3);
      // half the time force the jets of c_k at xi to vanish
      if (t % 2 == 0 && k > 0) c = c * (Poly::x() - Poly(xi)).pow(static_cast<unsigned>(k));
      sf.c.emplace_back(c);
    }
    const DiffOp d = sf.reconstruct(Var::X);
    CHECK(is_formally_symmetric(d));
    const SymForm back = symmetric_form(d);
    CHECK(back.reconstruct(Var::X) == d);
    const bool zero = boundary_form(d, xi).is_zero();
    CHECK(zero == jet_conditions_hold(back, xi));
    if (zero) ++vanishing;
  }
  CHECK(vanishing >= 40);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const DiffOp d = random_rational_op(rng, 4, 3);
    const std::string s = to_text(d);
    const DiffOp back = parse_diffop(s);
    CHECK(back == d);
    CHECK(to_text(back) == s);
  }
  const DiffOp z = parse_diffop("(z^2) * Dz^2 - (1/2) * Dz + 3", Var::Z);
  CHECK(z.var() == Var::Z);
  CHECK(to_text(z) == "(z^2) * Dz^2 + (-1)/(2) * Dz^1 + (3)");
  CHECK(parse_diffop(to_text(z)) == z);
  CHECK(to_text(DiffOp()) == "0");
  CHECK_THROWS_AS(parse_diffop("(x^2 * Dx"), Error);
  CHECK_THROWS_AS(parse_diffop("(x) * Dx^2 + (1) * Dz"), Error);
}

TEST_CASE("exact linear algebra") {
  Matrix m{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)},
           {Rational(0), Rational(1), Rational(1)}};
  CHECK(rank(m) == 2);
  const Matrix ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    CHECK(s == 0);
  }
  const DiffOp a = op("(1)/(x) * Dx^1 + (x)");
  const DiffOp b = op("(1)/(x^2)");
  OpFrame frame({&a, &b});
  const DiffOp c = a * Rational(2) - b;
  const Vector ca = frame.coords(a), cb = frame.coords(b), cc = frame.coords(c);
  for (std::size_t j = 0; j < ca.size(); ++j) CHECK(cc[j] == 2 * ca[j] - cb[j]);
}
