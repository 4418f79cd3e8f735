#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "prolate/darboux/construct.hpp"
#include "prolate/darboux/spaces.hpp"
#include "prolate/numverify/commutator.hpp"
#include "prolate/numverify/simd.hpp"
#include "prolate/numverify/special.hpp"

using namespace prolate;
using namespace prolate::numverify;
using commute::ContourSpec;
using commute::Search;
using darboux::DarbouxData;
using exactalg::DiffOp;
using exactalg::Poly;
using exactalg::RatFn;
using exactalg::Rational;
using exactalg::Var;
using GR = exactalg::GaussianRational;

namespace {

DarbouxData certified(DarbouxData d) {
  darboux::certify(d);
  return d;
}

const ContourSpec kUnit = ContourSpec::segment(Rational(-1), Rational(1));
const ContourSpec kBand = ContourSpec::segment(GR(0, -2), GR(0, 2));
const ContourSpec kRay = ContourSpec::ray(Rational(0), 0);
const ContourSpec kArc = ContourSpec::polyline({GR(-1), GR(0, 1), GR(1)});

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// fourth-order central second difference
template <class F>
cplx second_difference(F f, cplx x, double h) {
  return (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h);
}

}  // namespace

TEST_CASE("gauss-legendre rules") {
  const GaussRule g3 = gauss_legendre(3);
  CHECK(g3.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
  CHECK(g3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  for (int n : {1, 2, 7, 20, 40}) {
    const GaussRule g = gauss_legendre(n);
    for (int k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  // weights carry dz along a complex polyline
  const ContourRule r = contour_rule(kArc, {40, 10, 8.0});
  cplx len = 0.0;
  for (const auto& w : r.weights) len += w;
  CHECK(std::abs(len - cplx(2.0, 0.0)) < 1e-14);
  const ContourRule ray = contour_rule(kRay, {60, 20, 8.0});
  CHECK(ray.truncation == 8.0);
  CHECK(ray.size() == 60);
}

TEST_CASE("simd dot matches the scalar path") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 200u, 1001u}) {
    std::vector<cplx> a(n), b(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = {u(rng), u(rng)};
      b[i] = {u(rng), u(rng)};
      w[i] = {u(rng), u(rng)};
    }
    cplx naive = 0.0;
    for (std::size_t i = 0; i < n; ++i) naive += a[i] * b[i] * w[i];
    const cplx s = simd::dot_scalar(a.data(), b.data(), w.data(), n);
    CHECK(std::abs(s - naive) <= 1e-13 * (1.0 + std::abs(naive)));
    const cplx s0 = simd::dot_scalar(a.data(), b.data(), nullptr, n);
    if (simd::avx2_available()) {
      const cplx v = simd::dot_avx2(a.data(), b.data(), w.data(), n);
      CHECK(std::abs(v - s) <= 1e-13 * (1.0 + std::abs(s)));
      CHECK(std::abs(simd::dot_avx2(a.data(), b.data(), nullptr, n) - s0) <= 1e-13 * (1.0 + std::abs(s0)));
    }
  }
}

TEST_CASE("airy function") {
  CHECK(eval_airy(0.0).ai.real() == doctest::Approx(0.3550280538878172).epsilon(1e-15));
  double prev = INFINITY;
  for (int k = 0; k <= 200; ++k) {
    const double x = -2.0 + 10.0 * k / 200.0;
    const AiryValue a = eval_airy(x);
    CHECK(rel(a.ai, boost::math::airy_ai(x)) < 1e-10);
    CHECK(rel(a.aip, boost::math::airy_ai_prime(x)) < 1e-10);
    if (x >= 1.0) {
      CHECK(a.ai.real() < prev);
      prev = a.ai.real();
    }
  }
  // ODE residual on every evaluation branch, A'' from a difference of A'
  for (int k = 0; k < 50; ++k) {
    const cplx w = std::polar(0.3 + 0.3 * k, -2.9 + 5.8 * k / 49.0);
    auto aip = [](cplx t) { return eval_airy(t).aip; };
    const double h = 1e-3;
    const cplx d2 = (aip(w - 2.0 * h) - 8.0 * aip(w - h) + 8.0 * aip(w + h) - aip(w + 2.0 * h)) / (12.0 * h);
    const AiryValue a = eval_airy(w);
    CHECK(std::abs(d2 - w * a.ai) <= 1e-9 * (std::abs(w * a.ai) + std::abs(a.aip)));
  }
  // Ai(w) + om Ai(om w) + om^2 Ai(om^2 w) = 0
  const cplx om = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  for (double r : {0.5, 3.0, 7.0, 13.0}) {
    const cplx w = std::polar(r, 0.4);
    const cplx s = eval_airy(w).ai + om * eval_airy(om * w).ai + om * om * eval_airy(om * om * w).ai;
    const double scale = std::abs(eval_airy(om * w).ai) + std::abs(eval_airy(om * om * w).ai);
    CHECK(std::abs(s) <= 1e-10 * scale);
  }
  CHECK_THROWS_AS(eval_airy(100.0), Error);
}

TEST_CASE("bessel bispectral function") {
  // nu = 0: ratio to sinh(xz) is constant
  cplx ratio0 = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const cplx x(0.3 + 0.4 * i, 0.1 * j), z(0.5 + 0.2 * j, -0.2 * i);
      const cplx ratio = eval_bessel_psi(0.0, x, z).value / std::sinh(x * z);
      if (i == 0 && j == 0) ratio0 = ratio;
      CHECK(rel(ratio, ratio0) < 1e-9);
    }
  // i^{nu+1/2} (xz)^{1/2} I_{nu+1/2}(xz) for positive arguments
  for (double nu : {0.0, 1.0 / 3.0, 0.5, 2.5}) {
    for (double x : {0.2, 0.9, 1.7})
      for (double z : {0.4, 1.3, 2.0}) {
        const cplx expect = std::pow(cplx(0, 1), nu + 0.5) * std::sqrt(x * z) *
                            boost::math::cyl_bessel_i(nu + 0.5, x * z);
        CHECK(rel(eval_bessel_psi(nu, x, z).value, expect) < 1e-12);
      }
  }
  // L_nu Psi = z^2 Psi and the x-derivative, nu = 1/3
  const double nu = 1.0 / 3.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const cplx x(0.4 + 0.3 * i, 0.2), z(0.3 + 0.35 * j, 0.5);
      auto f = [&](cplx t) { return eval_bessel_psi(nu, t, z).value; };
      const cplx psi = f(x);
      const cplx lhs = second_difference(f, x, 1e-3) - nu * (nu + 1) / (x * x) * psi;
      CHECK(std::abs(lhs - z * z * psi) <= 1e-8 * std::abs(z * z * psi));
      const cplx d1 = (f(x - 2e-3) - 8.0 * f(x - 1e-3) + 8.0 * f(x + 1e-3) - f(x + 2e-3)) / 12e-3;
      CHECK(rel(eval_bessel_psi(nu, x, z).dx, d1) < 1e-9);
      CHECK(std::abs(eval_bessel_psi(nu, x, z).value - eval_bessel_psi(nu, z, x).value) <= 1e-12 * std::abs(psi));
    }
}

TEST_CASE("second-kind bessel partner") {
  // x^{1/2} z^{1/2} K_{nu+1/2}(xz) for positive arguments, up to a constant
  for (double nu : {0.5, 1.5, 2.5, 1.0 / 3.0}) {
    cplx r0 = 0.0;
    bool first = true;
    for (double x : {0.3, 0.8, 1.6})
      for (double z : {0.5, 1.1}) {
        // K_mu for integer mu, otherwise the independent I_{-mu}
        const double mu = nu + 0.5;
        const double expect = std::sqrt(x * z) * (mu == std::round(mu) ? boost::math::cyl_bessel_k(mu, x * z)
                                                                       : boost::math::cyl_bessel_i(-mu, x * z));
        const cplx r = eval_bessel_psi_second(nu, x, z).value / expect;
        if (first) r0 = r;
        first = false;
        CHECK(rel(r, r0) < 1e-11);
      }
  }
  // ODE in x, derivative, symmetry off the real axis
  for (double nu : {0.5, 2.5}) {
    for (int i = 0; i < 5; ++i) {
      const cplx x(0.4 + 0.3 * i, 0.3), z(-0.5 + 0.3 * i, 0.6);
      auto f = [&](cplx t) { return eval_bessel_psi_second(nu, t, z).value; };
      const cplx psi = f(x);
      const cplx pot = nu * (nu + 1) / (x * x) * psi;
      const cplx lhs = second_difference(f, x, 1e-3) - pot;
      CHECK(std::abs(lhs - z * z * psi) <= 1e-8 * (std::abs(z * z * psi) + std::abs(pot)));
      const cplx d1 = (f(x - 2e-3) - 8.0 * f(x - 1e-3) + 8.0 * f(x + 1e-3) - f(x + 2e-3)) / 12e-3;
      CHECK(rel(eval_bessel_psi_second(nu, x, z).dx, d1) < 1e-9);
      CHECK(rel(eval_bessel_psi_second(nu, z, x).value, psi) < 1e-12);
    }
  }
}

TEST_CASE("jets from the base ODE") {
  const BaseFunction airy{BaseFunction::Kind::Airy, 0.0};
  const BaseFunction bes{BaseFunction::Kind::Bessel, 1.0 / 3.0};
  for (const BaseFunction& b : {airy, bes}) {
    const cplx x(0.7, 0.2), z(0.9, -0.1);
    const auto jet = b.jets_x(x, z, 4);
    auto d2 = [&](cplx t) { return b.jets_x(t, z, 2)[2]; };
    CHECK(rel(second_difference(d2, x, 1e-3), jet[4]) < 1e-8);
    CHECK(rel(b.jets_z(x, z, 0)[0], jet[0]) < 1e-14);
  }
}

TEST_CASE("darboux bispectral functions") {
  const DarbouxData airy = certified(DarbouxData::identity(bispectral::Family::airy()));
  CHECK(eval_psi(airy, 0.5, 0.25) == eval_airy(0.75).ai);

  // ladder(1/2, 2) is proportional to Psi_{5/2}
  const DarbouxData lad = certified(darboux::ladder(Rational(1, 2), 2));
  cplx r0 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx x(0.4 + 0.3 * i, 0.3), z(0.5 + 0.25 * j, -0.4);
      const cplx r = eval_psi(lad, x, z) / eval_bessel_psi(2.5, x, z).value;
      if (i == 0 && j == 0) r0 = r;
      CHECK(rel(r, r0) < 1e-9);
    }
  CHECK_THROWS_AS(eval_psi(lad, 0.5, 0.0), Error);

  // R Psi = S Psi for every generator of S1 + S2
  const DarbouxData self = darboux::load_data(std::string(PROLATE_TEST_DATA) + "/airy_selfdual.yaml");
  for (const DarbouxData* d : {&lad, &self}) {
    DarbouxData c = *d;
    darboux::certify(c);
    const PsiEvaluator first(c);
    const PsiEvaluator second(c, {BaseFunction::Kind::BesselSecond, 0.5});
    const darboux::SSpaces sp = darboux::s_spaces(c, 3, 3);
    for (const PsiEvaluator* ev : {&first, &second})
    for (const auto* space : {&sp.s1, &sp.s2})
      for (const auto& g : space->generators()) {
        if (ev == &second && c.family.is_airy()) continue;
        const PsiEvaluator& psi = *ev;
        const PsiAction ax = psi.x_action(g.x), az = psi.z_action(g.z);
        for (const cplx& x : {cplx(0.6, 0.3), cplx(1.1, -0.2)})
          for (const cplx& z : {cplx(0.8, 0.1), cplx(0.5, 0.7)}) {
            const cplx lhs = psi.apply(ax, x, z), rhs = psi.apply(az, x, z);
            CHECK(std::abs(lhs - rhs) <= 1e-7 * std::max(1.0, std::abs(lhs)));
          }
      }
  }
}

TEST_CASE("kernels against closed forms") {
  const DarbouxData exp = certified(DarbouxData::identity(bispectral::Family::bessel(0)));
  KernelSetup s;
  s.kind = KernelKind::ExpPair;
  s.gamma1 = kUnit;
  s.gamma2 = kBand;
  s.grid = {60, 20, 8.0};
  s.rule = {80, 20, 8.0};
  const KernelMatrix km = kernel_matrix(exp, s);
  double err = 0.0;
  for (int i = 0; i < km.grid.size(); ++i)
    for (int j = 0; j < km.grid.size(); ++j) {
      const cplx t = km.grid.nodes[i] - km.grid.nodes[j];
      const cplx expect = t == 0.0 ? cplx(0, 4) : cplx(0, 2) * std::sin(2.0 * t) / t;
      err = std::max(err, std::abs(km.K(i, j) - expect));
    }
  CHECK(err < 1e-10);

  const DarbouxData airy = certified(DarbouxData::identity(bispectral::Family::airy()));
  KernelSetup a;
  a.gamma1 = kRay;
  a.gamma2 = kRay;
  a.grid = {100, 20, 8.0};
  a.rule = {120, 20, 8.0};
  const KernelMatrix ka = kernel_matrix(airy, a);
  CHECK(ka.tail_estimate < 1e-10);
  double kmax = ka.K.cwiseAbs().maxCoeff(), aerr = 0.0, asym = 0.0;
  for (int i = 0; i < ka.grid.size(); i += 10)
    for (int j = 0; j < ka.grid.size(); j += 10) {
      const double x = ka.grid.nodes[i].real(), y = ka.grid.nodes[j].real();
      using boost::math::airy_ai;
      using boost::math::airy_ai_prime;
      const double expect = i == j ? airy_ai_prime(x) * airy_ai_prime(x) - x * airy_ai(x) * airy_ai(x)
                                   : (airy_ai(x) * airy_ai_prime(y) - airy_ai_prime(x) * airy_ai(y)) / (x - y);
      aerr = std::max(aerr, std::abs(ka.K(i, j) - expect));
    }
  for (int i = 0; i < ka.grid.size(); ++i)
    for (int j = 0; j < ka.grid.size(); ++j) asym = std::max(asym, std::abs(ka.K(i, j) - ka.K(j, i)));
  CHECK(aerr < 1e-8 * kmax);
  CHECK(asym <= 1e-14 * kmax);

  // assembly does not depend on the thread count
  a.threads = 1;
  const KernelMatrix k1 = kernel_matrix(airy, a);
  a.threads = 4;
  const KernelMatrix k4 = kernel_matrix(airy, a);
  CHECK((k1.K.array() == k4.K.array()).all());

  const DarbouxData lad = certified(darboux::ladder(Rational(1, 2), 2));
  KernelSetup bad;
  bad.gamma1 = kUnit;
  bad.gamma2 = kArc;
  try {
    kernel_matrix(lad, bad);
    FAIL("expected PoleOnContour");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleOnContour);
  }
}

TEST_CASE("integration by parts cross-check") {
  const ContourSpec unit01 = ContourSpec::segment(Rational(0), Rational(1));
  TestFunction f;
  f.p = Poly(std::vector<Rational>{0, 1, -1});  // (1 - t) t
  f.gauss = 0;
  CHECK(byparts_residual(DiffOp::derivative(Var::X), unit01, f, f) <= 1e-12);

  TestFunction g1, g2;
  g2.center = 0.1;
  g2.alpha = 1.3;
  CHECK(byparts_residual(DiffOp::derivative(Var::X, 2), kUnit, g1, g2) <= 1e-8);

  TestFunction e;
  e.alpha = std::sqrt(2.0);  // exp(-t^2)
  const DiffOp la = bispectral::airy_operator(Var::X);
  CHECK(byparts_residual(la, kRay, e, e) <= 1e-6);

  // a non-symmetric operator with nonzero boundary terms on a complex arc
  const DiffOp d3 = DiffOp::term(RatFn(Poly::x()), 3, Var::X) + DiffOp::derivative(Var::X);
  CHECK(byparts_residual(d3, kArc, g1, g2, {200, 20, 8.0}) <= 1e-10);
}

TEST_CASE("commutation for the exponential pair") {
  const DarbouxData exp = certified(DarbouxData::identity(bispectral::Family::bessel(0)));
  const commute::CommutingSolution sol = commute::solve_commuting(exp, kUnit, kBand, Search{});
  KernelSetup s;
  s.kind = KernelKind::ExpPair;
  s.gamma1 = kUnit;
  s.gamma2 = kBand;
  s.grid = {200, 20, 8.0};
  s.rule = {100, 20, 8.0};
  const KernelMatrix km = kernel_matrix(exp, s);
  const CommutatorReport r = commutator_report(km, sol, kUnit);
  CHECK(r.residuals.size() == 20);
  CHECK(r.grid_points == 200);
  CHECK(r.max_residual <= 1e-8);
  CHECK(r.alignment_applicable);
  CHECK(r.eigen_used > 0);
  CHECK(r.alignment <= 1e-6);

  const CommutatorReport id = commutator_report(km, DiffOp::identity(Var::X), kUnit);
  CHECK(id.max_residual == 0.0);

  DiffOp perturbed = sol.D;
  perturbed.add_term(RatFn(Poly::x()), 0);
  CHECK(commutator_report(km, perturbed, kUnit).max_residual > 1e-3);

  // the same residual table on repeat
  CHECK(to_text(commutator_report(km, sol, kUnit)) == to_text(r));
}

TEST_CASE("commutation for airy and ladder kernels") {
  const DarbouxData airy = certified(DarbouxData::identity(bispectral::Family::airy()));
  const commute::CommutingSolution sa = commute::solve_commuting(airy, kRay, kRay, Search{});
  KernelSetup a;
  a.gamma1 = kRay;
  a.gamma2 = kRay;
  a.grid = {100, 20, 8.0};
  a.rule = {120, 20, 8.0};
  const CommutatorReport ra = commutator_report(kernel_matrix(airy, a), sa, kRay);
  CHECK(ra.max_residual <= 1e-8);
  CHECK(ra.alignment_applicable);
  CHECK(ra.eigen_used >= 3);
  CHECK(ra.alignment <= 1e-6);

  const DarbouxData lad = certified(darboux::ladder(Rational(1, 2), 2));
  const commute::CommutingSolution sl = commute::solve_commuting(lad, kArc, kArc, Search{});
  // the single kernel is identically zero here: Psi(x,z) Psi(y,z) is odd
  // and entire in z, and Gamma_2 joins -1 to 1
  KernelSetup l;
  l.gamma1 = kArc;
  l.gamma2 = kArc;
  l.grid = {40, 20, 8.0};
  l.rule = {40, 20, 8.0};
  const KernelMatrix single = kernel_matrix(lad, l);
  CHECK(single.K.cwiseAbs().maxCoeff() < 1e-14);
  l.kind = KernelKind::BesselPair;
  l.gamma2 = kArc;
  l.grid = {120, 20, 8.0};
  l.rule = {120, 20, 8.0};
  const CommutatorReport rl = commutator_report(kernel_matrix(lad, l), sl, kArc);
  MESSAGE("ladder residual " << rl.max_residual << " alignment " << rl.alignment << " over " << rl.eigen_used
                             << " eigenpairs, kernel error " << rl.kernel_error);
  CHECK(rl.max_residual <= 1e-4);
  // the pair kernel is nearly nilpotent (odd cancellation over Gamma_1)
  CHECK_FALSE(rl.alignment_applicable);
  CHECK(rl.spectral_ratio < 1e-3);
}

TEST_CASE("quadrature refinement reduces the residual") {
  const DarbouxData exp = certified(DarbouxData::identity(bispectral::Family::bessel(0)));
  const commute::CommutingSolution sol = commute::solve_commuting(exp, kUnit, kBand, Search{});
  double prev = INFINITY;
  for (int order : {4, 6, 8}) {
    KernelSetup s;
    s.kind = KernelKind::ExpPair;
    s.gamma1 = kUnit;
    s.gamma2 = kBand;
    s.grid = {2 * order, order, 8.0};
    s.rule = {2 * order, order, 8.0};
    const double r = commutator_report(kernel_matrix(exp, s), sol, kUnit, {6, 6, 1e-9, 1}).max_residual;
    CHECK(r < prev);
    prev = r;
  }
}
