#include "prolate/numverify/special.hpp"

#include <cmath>
#include <numbers>

#include "prolate/error.hpp"

namespace prolate::numverify {

namespace {

constexpr double kAi0 = 0.355028053887817239260;
constexpr double kAip0 = -0.258819403792806798405;
constexpr double kSmallRadius = 2.5;
constexpr double kAsymptoticRadius = 12.0;
constexpr double kMaxRadius = 60.0;
constexpr double kMaxStep = 0.5;

bool in_asymptotic_sector(cplx w) { return std::abs(std::arg(w)) < 2.0 * std::numbers::pi / 3.0; }
// Ai is recessive outward only for |arg w| < pi/3; elsewhere it has to be
// integrated outward to stay stable.
bool recessive(cplx w) { return std::abs(std::arg(w)) <= std::numbers::pi / 3.0; }

AiryValue asymptotic(cplx w) {
  const cplx s = std::sqrt(w);
  const cplx zeta = 2.0 / 3.0 * w * s;
  const cplx q = std::sqrt(s);  // w^{1/4}
  cplx su = 0.0, sv = 0.0, zp = 1.0;
  double u = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    const double v = k == 0 ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    const cplx tu = (k % 2 == 0 ? 1.0 : -1.0) * u * zp;
    const cplx tv = (k % 2 == 0 ? 1.0 : -1.0) * v * zp;
    const double mag = std::abs(tu) + std::abs(tv);
    if (mag > last) break;  // smallest term reached
    su += tu;
    sv += tv;
    last = mag;
    if (mag < 1e-17) break;
    zp /= zeta;
    const double kk = k + 1;
    u *= (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
  }
  const cplx e = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  return {e / q * su, -e * q * sv};
}

AiryValue step_along(cplx from, AiryValue val, cplx to) {
  const cplx delta = to - from;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(delta) / kMaxStep)));
  const cplx h = delta / static_cast<double>(steps);
  cplx w = from;
  for (int i = 0; i < steps; ++i) {
    val = airy_taylor_step(w, val, h);
    w += h;
  }
  return val;
}

}  // namespace

AiryValue airy_taylor_step(cplx w0, AiryValue at, cplx h) {
  // a_{k+2} (k+2)(k+1) = w0 a_k + a_{k-1}
  cplx am1 = 0.0, a0 = at.ai, a1 = at.aip;
  cplx value = a0 + a1 * h, deriv = a1;
  cplx hp = h;  // h^{k+1} for the term a_{k+2}
  double scale = std::abs(a0) + std::abs(a1) + 1e-300;
  for (int k = 0; k < 200; ++k) {
    const cplx a2 = (w0 * a0 + am1) / ((k + 2.0) * (k + 1.0));
    const cplx term_d = (k + 2.0) * a2 * hp;
    hp *= h;
    const cplx term_v = a2 * hp;
    value += term_v;
    deriv += term_d;
    am1 = a0;
    a0 = a1;
    a1 = a2;
    if (k > 4 && std::abs(term_v) + std::abs(term_d) < 1e-18 * scale &&
        std::abs(a0 * hp) + std::abs(am1 * hp) < 1e-18 * scale) {
      break;
    }
    scale = std::max(scale, std::abs(value));
  }
  return {value, deriv};
}

AiryValue eval_airy(cplx w) {
  const double r = std::abs(w);
  if (!std::isfinite(r) || r > kMaxRadius) throw Error(ErrorCode::Overflow, "Airy argument outside |w| <= 60");
  const AiryValue origin{kAi0, kAip0};
  if (r <= kSmallRadius) return airy_taylor_step(0.0, origin, w);
  if (r >= kAsymptoticRadius && in_asymptotic_sector(w)) return asymptotic(w);
  if (recessive(w)) {
    // integrate the decaying solution inward from the asymptotic circle
    const cplx start = w / r * kAsymptoticRadius;
    return step_along(start, asymptotic(start), w);
  }
  // dominant or oscillatory directions: outward from the series disc
  const cplx start = w / r * kSmallRadius;
  return step_along(start, airy_taylor_step(0.0, origin, start), w);
}

PsiValue eval_bessel_psi(double nu, cplx x, cplx z) {
  const cplx u = x * x * z * z / 4.0;
  // G(u) and G'(u) in the series variable u/4 -> u here
  cplx g = 0.0, gp = 0.0;
  cplx t = 1.0 / std::tgamma(nu + 1.5);
  double tmax = std::abs(t);
  for (int k = 0; k < 500; ++k) {
    g += t;
    if (k > 0) gp += static_cast<double>(k) * t / u;
    const cplx next = t * u / ((k + 1.0) * (k + nu + 1.5));
    tmax = std::max(tmax, std::abs(next));
    if (k > 2 && std::abs(next) < 1e-18 * std::abs(g) && std::abs(next) < 1e-18 * tmax) break;
    if (k == 499) throw Error(ErrorCode::NonConvergence, "Bessel series did not converge");
    t = next;
  }
  if (u == 0.0) gp = 1.0 / (std::tgamma(nu + 1.5) * (nu + 1.5));
  const cplx c = std::pow(cplx(0.0, 1.0), nu + 0.5) * std::pow(2.0, -nu - 0.5);
  const cplx xp = std::pow(x, nu + 1.0);
  const cplx zp = std::pow(z, nu + 1.0);
  // d/dx [x^{nu+1} G(x^2 z^2 / 4 * 4)] with G in u = x^2 z^2 / 4: du/dx = x z^2 / 2
  const cplx value = c * xp * zp * g;
  const cplx dx = c * zp * ((nu + 1.0) * xp / x * g + xp * gp * x * z * z / 2.0);
  return {value, dx};
}

PsiValue eval_bessel_psi_second(double nu, cplx x, cplx z) {
  const double mu = nu + 0.5;
  const long n = std::lround(mu);
  if (std::abs(mu - static_cast<double>(n)) > 1e-12) return eval_bessel_psi(-nu - 1.0, x, z);
  if (n < 0) return eval_bessel_psi_second(-nu - 1.0, x, z);
  if (x == 0.0 || z == 0.0) throw Error(ErrorCode::Pole, "second Bessel solution at xz = 0");
  const cplx w = x * z;
  const cplx h = w / 2.0;
  const cplx L = std::log(x) + std::log(z) - std::log(2.0);
  constexpr double kEuler = 0.577215664901532860606;
  // K_n(w) = 1/2 sum_{k<n} (n-k-1)!/k! (-1)^k h^{2k-n} + (-1)^{n+1} L I_n(w)
  //          + (-1)^n / 2 sum_k (psi(k+1) + psi(n+k+1)) h^{2k+n} / (k! (n+k)!)
  cplx k_val = 0.0, k_der = 0.0;
  for (long k = 0; k < n; ++k) {
    const cplx t = 0.5 * std::tgamma(static_cast<double>(n - k)) / std::tgamma(k + 1.0) * (k % 2 ? -1.0 : 1.0) *
                   std::pow(h, static_cast<double>(2 * k - n));
    k_val += t;
    k_der += t * static_cast<double>(2 * k - n) / w;
  }
  cplx i_val = 0.0, i_der = 0.0, rest = 0.0, rest_der = 0.0;
  double psi_a = -kEuler, psi_b = -kEuler;  // psi(k+1), psi(n+k+1)
  for (long j = 1; j <= n; ++j) psi_b += 1.0 / j;
  cplx t = std::pow(h, static_cast<double>(n)) / std::tgamma(n + 1.0);
  for (long k = 0; k < 500; ++k) {
    const double p = static_cast<double>(2 * k + n);
    i_val += t;
    i_der += p * t / w;
    rest += (psi_a + psi_b) * t;
    rest_der += (psi_a + psi_b) * p * t / w;
    const cplx next = t * h * h / ((k + 1.0) * (n + k + 1.0));
    if (k > 2 && std::abs(next) < 1e-18 * std::abs(i_val)) break;
    if (k == 499) throw Error(ErrorCode::NonConvergence, "K_n series did not converge");
    t = next;
    psi_a += 1.0 / (k + 1.0);
    psi_b += 1.0 / (n + k + 1.0);
  }
  const double sgn = n % 2 ? 1.0 : -1.0;  // (-1)^{n+1}
  k_val += sgn * L * i_val - sgn * 0.5 * rest;
  k_der += sgn * (i_val / w + L * i_der) - sgn * 0.5 * rest_der;
  const cplx s = std::sqrt(x) * std::sqrt(z);
  return {s * k_val, z * (s / (2.0 * w) * k_val + s * k_der)};
}

}  // namespace prolate::numverify
