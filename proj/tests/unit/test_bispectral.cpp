#include <random>

#include "doctest.h"
#include "prolate/bispectral/bmap.hpp"
#include "prolate/bispectral/symspace.hpp"
#include "prolate/error.hpp"
#include "prolate/exactalg/text.hpp"
#include "../support/filtration_oracle.hpp"
#include "../support/random_ops.hpp"

using namespace prolate;
using namespace prolate::bispectral;
using exactalg::parse_diffop;
using exactalg::Poly;
using exactalg::RatFn;

namespace {

DiffOp xop(const std::string& s) { return parse_diffop(s, Var::X); }
DiffOp zop(const std::string& s) { return parse_diffop(s, Var::Z); }

DiffOp random_bessel_element(std::mt19937& rng, int max_n, int max_m, const Family& f) {
  std::uniform_int_distribution<int> pn(0, max_n), pm(0, max_m), terms(1, 4), coin(0, 1);
  BasisDecomp dec;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    dec.coeffs[{pm(rng), pn(rng), coin(rng) == 1}] += prolate::testing::random_rational(rng);
  }
  return reconstruct(dec, f);
}

}  // namespace

TEST_CASE("family parsing") {
  CHECK(Family::parse("airy").is_airy());
  const Family b = Family::parse("bessel:2/6");
  CHECK(b.nu == Rational(1, 3));
  CHECK(b.rank() == 2);
  CHECK(b.to_string() == "bessel:1/3");
  CHECK(Family::parse("bessel:2").even_mode());
  CHECK(Family::parse("bessel:2").rank() == 1);
  CHECK_THROWS_AS(Family::parse("hermite"), Error);
}

TEST_CASE("airy map examples") {
  CHECK(b_airy(xop("x")) == zop("Dz^2 - z"));
  CHECK(b_airy(xop("Dx")) == zop("Dz"));
  CHECK(b_airy(xop("x*Dx")) == zop("Dz^3 - z*Dz - 1"));
  CHECK(b_airy(airy_operator(Var::X)) == zop("z"));
  CHECK(b_airy_inv(zop("z")) == airy_operator(Var::X));
  CHECK(b_airy_inv(zop("Dz")) == xop("Dx"));
  CHECK(b_airy_inv(zop("Dz^3 - z*Dz - 1")) == xop("x*Dx"));
  CHECK_THROWS_AS(b_airy(xop("(1)/(x) * Dx^1")), Error);
}

TEST_CASE("bessel map examples") {
  const Rational nu(1, 3);
  CHECK(b_bessel(xop("x^2"), nu) == bessel_operator(nu, Var::Z));
  CHECK(b_bessel(DiffOp::euler(Var::X), nu) == DiffOp::euler(Var::Z));
  CHECK(b_bessel(bessel_operator(nu, Var::X), nu) == zop("z^2"));
  CHECK(b_bessel(xop("x^3 * Dx"), nu) == DiffOp::euler(Var::Z) * bessel_operator(nu, Var::Z));

  const BasisDecomp l = decompose_bessel(bessel_operator(nu, Var::X), nu);
  REQUIRE(l.coeffs.size() == 1);
  CHECK(l.coeffs.begin()->first == BasisKey{0, 1, false});
  CHECK(l.coeffs.begin()->second == 1);

  const DiffOp x2 = xop("x^2");
  const DiffOp sym = x2 * bessel_operator(nu, Var::X) + bessel_operator(nu, Var::X) * x2;
  CHECK(reconstruct(decompose_bessel(sym, nu), Family::bessel(nu)) == sym);

  try {
    decompose_bessel(xop("Dx"), nu);
    FAIL("expected NotInSubalgebra");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInSubalgebra);
  }
}

TEST_CASE("airy decomposition round trip") {
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    const DiffOp r = prolate::testing::random_op(rng, 5, 4);
    CHECK(reconstruct(decompose_airy(r), Family::airy()) == r);
  }
}

TEST_CASE("anti-multiplicativity and adjoint intertwining") {
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    const DiffOp a = prolate::testing::random_op(rng, 3, 3);
    const DiffOp b = prolate::testing::random_op(rng, 3, 3);
    CHECK(b_airy(a * b) == b_airy(b) * b_airy(a));
    CHECK(exactalg::adjoint(b_airy(a)) == b_airy(exactalg::adjoint(a)));
    CHECK(b_airy_inv(b_airy(a)) == a);
  }
  for (int t = 0; t < 100; ++t) {
    const Family f = Family::bessel(prolate::testing::random_rational(rng, 7, 4));
    const DiffOp a = random_bessel_element(rng, 2, 2, f);
    const DiffOp b = random_bessel_element(rng, 2, 2, f);
    CHECK(b_bessel(a * b, f.nu) == b_bessel(b, f.nu) * b_bessel(a, f.nu));
    CHECK(exactalg::adjoint(b_bessel(a, f.nu)) == b_bessel(exactalg::adjoint(a), f.nu));
    CHECK(b_map_inv(f, b_map(f, a)) == a);
  }
}

TEST_CASE("even mode parity") {
  std::mt19937 rng(13);
  for (int nu = -1; nu <= 2; ++nu) {
    const Family f = Family::bessel(nu);
    for (int t = 0; t < 10; ++t) {
      const DiffOp a = random_bessel_element(rng, 3, 3, f);
      CHECK(exactalg::reflect(a) == a);
    }
  }
}

TEST_CASE("filtration generators and dimensions") {
  CHECK(sym_filtration(Family::airy(), 0, 0).rank() == 1);
  CHECK(sym_filtration(Family::airy(), 2, 3).rank() == 12);
  CHECK(sym_filtration(Family::bessel(Rational(1, 2)), 3, 3).rank() == 16);
  for (const Family& f : {Family::airy(), Family::bessel(Rational(1, 3)), Family::bessel(0)}) {
    const SymSpace s = sym_filtration(f, 2, 2);
    for (const auto& g : s.generators()) {
      CHECK(exactalg::is_formally_symmetric(g.x));
      CHECK(exactalg::is_formally_symmetric(g.z));
      CHECK(b_map(f, g.x) == g.z);
    }
  }
}

TEST_CASE("filtration dimension matches the basis oracle") {
  for (const Family& f : {Family::airy(), Family::bessel(Rational(1, 2)), Family::bessel(1)}) {
    for (int l1 = 0; l1 <= 3; ++l1) {
      for (int l2 = 0; l2 <= 3; ++l2) {
        const int expected = (l1 + 1) * (l2 + 1);
        CHECK(prolate::testing::symmetric_filtration_dim(f, l1, l2) == expected);
        CHECK(sym_filtration(f, l1, l2).rank() == expected);
      }
    }
  }
}
