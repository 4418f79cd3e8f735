#include <random>

#include "doctest.h"
#include "prolate/bispectral/bmap.hpp"
#include "prolate/darboux/construct.hpp"
#include "prolate/darboux/spaces.hpp"
#include "prolate/exactalg/text.hpp"

using namespace prolate;
using namespace prolate::darboux;
using exactalg::parse_diffop;

namespace {

std::string data_path(const std::string& name) { return std::string(PROLATE_TEST_DATA) + "/" + name; }

DiffOp xfn(const RatFn& f) { return DiffOp::function(f, Var::X); }

}  // namespace

TEST_CASE("ladder data") {
  DarbouxData d = ladder(Rational(1, 2), 2);
  const DiffOp D = DiffOp::derivative(Var::X);
  const Rational nu(1, 2);
  const DiffOp expected_p = (D - xfn(RatFn(nu + 2) * RatFn::x_power(-1))) * (D - xfn(RatFn(nu + 1) * RatFn::x_power(-1)));
  CHECK(d.P() == expected_p);
  const DiffOp L = bispectral::bessel_operator(nu, Var::X);
  CHECK(exactalg::adjoint(d.P()) * d.P() == L * L);
  const Certificate c = certify(d);
  CHECK(c.ok());
  CHECK(c.residual.is_zero());
  CHECK(c.rho1 == 2);
  CHECK(c.rho2 == 2);
  CHECK(c.epsilon == 1);
  CHECK(c.epsilon_is_parity);
  CHECK(d.verified);

  DarbouxData e = ladder(Rational(0), 2);
  CHECK(exactalg::reflect(e.P()) == e.P());
  CHECK(certify(e).ok());

  const DarbouxData id = ladder(Rational(1, 3), 0);
  CHECK(id.P() == DiffOp::identity(Var::X));
  CHECK(id.normalizer == Poly::one());
  const Certificate ci = darboux_verify(id);
  CHECK(ci.ok());
  CHECK(ci.rho1 == 0);
  CHECK(ci.rho2 == 0);

  try {
    ladder(Rational(1, 2), 1);
    FAIL("expected EvennessViolation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::EvennessViolation);
  }
}

TEST_CASE("four-step ladder") {
  DarbouxData d = ladder(Rational(1, 3), 4);
  const Certificate c = certify(d);
  CHECK(c.ok());
  CHECK(c.rho1 == 4);
  CHECK(c.rho2 == 4);
}

TEST_CASE("corrupted data is rejected with a residual") {
  const DarbouxData d = load_data(data_path("corrupted_g.yaml"));
  const Certificate c = darboux_verify(d);
  REQUIRE_FALSE(c.ok());
  CHECK(*c.failure == ErrorCode::FactorizationFails);
  CHECK_FALSE(c.residual.is_zero());

  DarbouxData e = ladder(Rational(1, 2), 2);
  e.g = e.g + Poly::one();
  e.normalizer = e.normalizer * Rational(2);
  CHECK(darboux_verify(e).failure == ErrorCode::FactorizationFails);
}

TEST_CASE("corpus data verifies and round-trips") {
  for (const char* name : {"airy_selfdual.yaml", "airy_identity.yaml", "exp_identity.yaml", "ladder_half.yaml"}) {
    DarbouxData d = load_data(data_path(name));
    CHECK_FALSE(d.verified);
    CHECK(certify(d).ok());
    const std::string text = to_yaml(d);
    CHECK(text.find("verified: true") != std::string::npos);
    DarbouxData back = from_yaml(text);
    CHECK_FALSE(back.verified);
    CHECK(back.R == d.R);
    CHECK(certify(back).ok());
    CHECK(to_yaml(back) == text);
  }
  const DarbouxData half = load_data(data_path("ladder_half.yaml"));
  CHECK(half.R == ladder(Rational(1, 2), 2).R);
  CHECK_THROWS_AS(from_yaml("family: airy\nR: \"(x * Dx\"\n"), Error);
  CHECK_THROWS_AS(from_yaml("family: airy\nR: \"x\"\nepsilon: 3\n"), Error);
}

TEST_CASE("airy self-dual datum") {
  DarbouxData d = load_data(data_path("airy_selfdual.yaml"));
  const Certificate c = certify(d);
  CHECK(c.rho1 == 2);
  CHECK(c.rho2 == 2);
  CHECK(c.bR == parse_diffop("(z) * Dz^2 + (-1) * Dz^1 + (-z^2)", Var::Z));
  CHECK(dual_presentation(d).epsilon == 1);
}

TEST_CASE("dual presentation") {
  for (const Rational& nu : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(3, 2)}) {
    DarbouxData d = ladder(nu, 2);
    certify(d);
    const DualPresentation dp = dual_presentation(d);
    CHECK(dp.epsilon == 1);
    CHECK(dp.bR.order() == 2);
  }
  DarbouxData id = DarbouxData::identity(Family::airy());
  CHECK_THROWS_AS(dual_presentation(id), Error);
  certify(id);
  CHECK(dual_presentation(id).bR == DiffOp::identity(Var::Z));
}

TEST_CASE("kernel construction") {
  const Rational nu(1, 3);
  const Family f = Family::bessel(nu);
  KernelResult one = darboux_from_kernel(f, {Seed::quasi_rational(nu + 1, Poly::one())});
  CHECK(one.P == DiffOp::derivative(Var::X) - xfn(RatFn(nu + 1) * RatFn::x_power(-1)));
  CHECK_FALSE(one.certificate.ok());

  try {
    darboux_from_kernel(f, {Seed::quasi_rational(nu + 1, Poly::one()),
                            Seed::quasi_rational(nu + 1, Poly(Rational(2)))});
    FAIL("expected SeedsDependent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SeedsDependent);
  }

  // kernel of the two-step ladder: x^{nu+1}, x^{nu+3}
  KernelResult two = darboux_from_kernel(
      f, {Seed::quasi_rational(nu + 1, Poly::one()), Seed::quasi_rational(nu + 1, Poly::monomial(1, 2))});
  REQUIRE(two.certificate.ok());
  REQUIRE(two.data);
  CHECK(two.data->verified);
  CHECK(two.P == ladder(nu, 2).P());
  CHECK(two.data->m == 2);
  CHECK(two.data->epsilon == 1);

  KernelResult airy = darboux_from_kernel(Family::airy(), {Seed::airy_jet(Rational(0), Poly::one())});
  CHECK(airy.P == bispectral::airy_operator(Var::X));
  REQUIRE(airy.data);
  CHECK(airy.certificate.ok());
  CHECK(airy.data->g == Poly::x());

  CHECK_THROWS_AS(darboux_from_kernel(Family::airy(), {Seed::airy_jet(Rational(0), Poly::one()),
                                                       Seed::airy_jet(Rational(0), Poly(Rational(2)))}),
                  Error);
  KernelResult shifted = darboux_from_kernel(Family::airy(), {Seed::airy_jet(Rational(1), Poly::x())});
  CHECK(shifted.P.order() == 2);
}

TEST_CASE("S-spaces and dimension bounds") {
  DarbouxData id = DarbouxData::identity(Family::airy());
  CHECK_THROWS_AS(s_spaces(id, 1, 1), Error);
  certify(id);
  const DimReport r = dim_bounds_check(id, 2, 2);
  CHECK(r.dim_sum == 9);
  CHECK(r.dim_intersection == 9);
  CHECK(r.sum_bound == 9);

  DarbouxData d = ladder(Rational(1, 2), 2);
  certify(d);
  const DimReport r33 = dim_bounds_check(d, 3, 3);
  CHECK(r33.dim_sum >= 12);
  CHECK(r33.ok());
  const DimReport r44 = dim_bounds_check(d, 4, 4);
  CHECK(r44.dim_intersection <= 9);
  const DimReport r11 = dim_bounds_check(d, 1, 1);
  CHECK(r11.dim_s1 == 0);
  CHECK(r11.dim_s2 == 0);
  CHECK(r11.dim_sum == 0);

  DarbouxData e = ladder(Rational(0), 2);
  certify(e);
  const DimReport re = dim_bounds_check(e, 3, 3);
  CHECK(re.parity_checked);
  CHECK(re.parity_ok);
}

TEST_CASE("identity datum partners are plain b-images") {
  DarbouxData id = DarbouxData::identity(Family::bessel(Rational(1, 3)));
  certify(id);
  const SSpaces s = s_spaces(id, 2, 1);
  for (const auto& g : s.s1.generators()) CHECK(bispectral::b_map(id.family, g.x) == g.z);
  for (const auto& g : s.s2.generators()) CHECK(bispectral::b_map(id.family, g.x) == g.z);
}
