#include "prolate/numverify/kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "prolate/commute/solve.hpp"
#include "prolate/error.hpp"
#include "prolate/numverify/simd.hpp"

namespace prolate::numverify {

using exactalg::Var;

std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::Single:
      return "single";
    case KernelKind::ExpPair:
      return "exp_pair";
    case KernelKind::BesselPair:
      return "bessel_pair";
  }
  return "?";
}

KernelKind parse_kernel_kind(const std::string& s) {
  if (s == "single") return KernelKind::Single;
  if (s == "exp_pair") return KernelKind::ExpPair;
  if (s == "bessel_pair") return KernelKind::BesselPair;
  throw Error(ErrorCode::Config, "unknown kernel kind '" + s + "'");
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PROLATE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return std::min(n, 256);
  }
  return 1;
}

namespace {

template <class F>
void parallel_rows(int rows, int threads, F&& body) {
  threads = std::max(1, std::min(threads, rows));
  if (threads == 1) {
    for (int i = 0; i < rows; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < rows; i += threads) body(i);
    });
  for (auto& th : pool) th.join();
}

// Row-major copy so that each row is contiguous for the dot kernel.
std::vector<cplx> rows_of(const Eigen::MatrixXcd& m) {
  std::vector<cplx> out(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index q = 0; q < m.cols(); ++q) out[i * m.cols() + q] = m(i, q);
  return out;
}

// Principal powers and logs are continuous along a contour whose interior
// stays off the cut (-inf, 0].
bool crosses_cut(const commute::ContourSpec& c) {
  for (const auto& p : c.pieces()) {
    const cplx a = p.from.to_complex();
    const cplx b = p.is_ray() ? a + 1e6 * p.direction() : p.to->to_complex();
    if (a.imag() * b.imag() < 0.0) {
      const double t = a.imag() / (a.imag() - b.imag());
      if ((a + t * (b - a)).real() <= 0.0) return true;
    }
    if (a.imag() == 0.0 && b.imag() == 0.0 && std::min(a.real(), b.real()) < 0.0) return true;
  }
  return false;
}

void reject_poles(const darboux::DarbouxData& d, const KernelSetup& s) {
  if (s.kind == KernelKind::ExpPair) return;
  std::vector<cplx> sx = commute::singular_points(d, Var::X), sz = commute::singular_points(d, Var::Z);
  if (s.kind == KernelKind::BesselPair) {
    sx.push_back(0.0);
    sz.push_back(0.0);
  }
  if (s.gamma1.passes_through_root(sx)) throw Error(ErrorCode::PoleOnContour, "a root of v lies on Gamma_1");
  if (s.gamma2.passes_through_root(sz))
    throw Error(ErrorCode::PoleOnContour, "a root of the normalizer lies on Gamma_2");
  const bool branched = s.kind == KernelKind::BesselPair || (d.family.is_bessel() && !d.family.nu_integer());
  if (branched && (crosses_cut(s.gamma1) || crosses_cut(s.gamma2)))
    throw Error(ErrorCode::InvalidContour, "contour crosses the branch cut of the principal powers");
}

}  // namespace

Eigen::MatrixXcd weighted_product(const Eigen::MatrixXcd& B1, const Eigen::MatrixXcd& B2,
                                  const std::vector<cplx>& w, int threads) {
  const std::vector<cplx> r1 = rows_of(B1), r2 = rows_of(B2);
  const std::size_t m = static_cast<std::size_t>(B1.cols());
  Eigen::MatrixXcd out(B1.rows(), B2.rows());
  parallel_rows(static_cast<int>(B1.rows()), threads, [&](int i) {
    for (Eigen::Index j = 0; j < B2.rows(); ++j)
      out(i, j) = simd::dot(r1.data() + i * m, r2.data() + j * m, w.data(), m);
  });
  return out;
}

KernelMatrix kernel_matrix(const darboux::DarbouxData& d, const KernelSetup& s) {
  s.gamma1.validate(d.family);
  s.gamma2.validate(d.family);
  reject_poles(d, s);
  KernelMatrix km;
  km.kind = s.kind;
  km.grid = contour_rule(s.gamma1, s.grid);
  km.rule = contour_rule(s.gamma2, s.rule);
  if (s.kind == KernelKind::Single) {
    km.psi1 = km.psi2 = std::make_shared<PsiEvaluator>(d);
  } else if (s.kind == KernelKind::BesselPair) {
    if (!d.family.is_bessel()) throw Error(ErrorCode::Config, "bessel_pair needs Bessel data");
    const double nu = exactalg::to_double(d.family.nu);
    km.psi1 = std::make_shared<PsiEvaluator>(d, BaseFunction{BaseFunction::Kind::Bessel, nu});
    km.psi2 = std::make_shared<PsiEvaluator>(d, BaseFunction{BaseFunction::Kind::BesselSecond, nu});
  } else {
    if (!(d.family.is_bessel() && d.family.nu == 0))
      throw Error(ErrorCode::Config, "the exponential pair belongs to the Bessel family with nu = 0");
    km.psi1 = std::make_shared<PsiEvaluator>(d, BaseFunction{BaseFunction::Kind::ExpPlus, 0.0});
    km.psi2 = std::make_shared<PsiEvaluator>(d, BaseFunction{BaseFunction::Kind::ExpMinus, 0.0});
  }
  const int n = km.grid.size(), m = km.rule.size();
  const int threads = thread_count(s.threads);
  km.A1.resize(n, m);
  km.A2.resize(n, m);
  parallel_rows(n, threads, [&](int i) {
    for (int q = 0; q < m; ++q) {
      km.A1(i, q) = km.psi1->value(km.grid.nodes[i], km.rule.nodes[q]);
      km.A2(i, q) = km.psi1 == km.psi2 ? km.A1(i, q) : km.psi2->value(km.grid.nodes[i], km.rule.nodes[q]);
    }
  });
  km.K = weighted_product(km.A1, km.A2, km.rule.weights, threads);

  RuleOptions finer = s.rule;
  finer.panel_order += 6;
  const ContourRule r2 = contour_rule(s.gamma2, finer);
  Eigen::MatrixXcd B1(n, r2.size()), B2(n, r2.size());
  parallel_rows(n, threads, [&](int i) {
    for (int q = 0; q < r2.size(); ++q) {
      B1(i, q) = km.psi1->value(km.grid.nodes[i], r2.nodes[q]);
      B2(i, q) = km.psi1 == km.psi2 ? B1(i, q) : km.psi2->value(km.grid.nodes[i], r2.nodes[q]);
    }
  });
  const double kmax0 = km.K.cwiseAbs().maxCoeff();
  const double diff = (weighted_product(B1, B2, r2.weights, threads) - km.K).cwiseAbs().maxCoeff();
  km.error_estimate = kmax0 > 0.0 ? diff / kmax0 : diff;

  if (km.rule.truncation > 0.0) {
    // Tail of int_T^inf: the integrand decays like exp(-(2/3) z^{3/2}), so
    // the tail is about |integrand(T)| / sqrt(T).
    const auto& last = s.gamma2.pieces().back();
    const cplx zT = last.from.to_complex() + km.rule.truncation * last.direction();
    std::vector<double> t1(n), t2(n);
    for (int i = 0; i < n; ++i) {
      t1[i] = std::abs(km.psi1->value(km.grid.nodes[i], zT));
      t2[i] = std::abs(km.psi2->value(km.grid.nodes[i], zT));
    }
    const double tail =
        *std::max_element(t1.begin(), t1.end()) * *std::max_element(t2.begin(), t2.end()) / std::sqrt(std::abs(zT));
    const double kmax = km.K.cwiseAbs().maxCoeff();
    km.tail_estimate = kmax > 0.0 ? tail / kmax : tail;
    if (km.tail_estimate > s.tail_tolerance)
      throw Error(ErrorCode::TruncationTail, "ray tail estimate " + std::to_string(km.tail_estimate) +
                                                 " exceeds tolerance");
  }
  return km;
}

}  // namespace prolate::numverify
