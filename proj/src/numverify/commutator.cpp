#include "prolate/numverify/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "prolate/error.hpp"
#include "prolate/exactalg/symmetric.hpp"
#include "prolate/exactalg/text.hpp"
#include "prolate/numverify/simd.hpp"

namespace prolate::numverify {

using exactalg::DiffOp;
using exactalg::Poly;
using exactalg::Rational;

std::vector<cplx> TestFunction::jets(cplx x, int n) const {
  const cplx u = alpha * (x - center);
  const cplx e = std::exp(-exactalg::to_double(gauss) * u * u / 2.0);
  std::vector<cplx> out;
  Poly q = p;
  cplx scale = 1.0;
  for (int j = 0; j <= n; ++j) {
    out.push_back(scale * q.eval(u) * e);
    q = q.derivative() - Poly::monomial(gauss, 1) * q;
    scale *= alpha;
  }
  return out;
}

std::vector<TestFunction> test_family(const commute::ContourSpec& c, int count, double ray_length) {
  TestFunction base;
  const auto& pieces = c.pieces();
  if (pieces.empty()) throw Error(ErrorCode::InvalidContour, "empty contour");
  const cplx a = pieces.front().from.to_complex();
  if (c.finite()) {
    const cplx b = pieces.back().to->to_complex();
    base.center = (a + b) / 2.0;
    base.alpha = 2.0 / (b - a);
  } else {
    base.center = a;
    base.alpha = 12.0 / (ray_length * pieces.back().direction());
  }
  std::vector<TestFunction> out;
  for (int k = 0; k < count; ++k) {
    TestFunction f = base;
    f.p = Poly::monomial(Rational(1), k);
    out.push_back(f);
  }
  return out;
}

std::string describe_family(const commute::ContourSpec& c, int count) {
  std::ostringstream s;
  s << "u^k exp(-u^2/2), k < " << count << ", u affine on " << c.to_string();
  return s.str();
}

cplx apply(const DiffOp& D, const TestFunction& f, cplx x) {
  if (D.is_zero()) return 0.0;
  const std::vector<cplx> j = f.jets(x, D.order());
  cplx s = 0.0;
  for (int k = 0; k <= D.order(); ++k) s += D.coeff(k).eval(x) * j[k];
  return s;
}

namespace {

double norm(const Eigen::VectorXcd& v) { return v.norm(); }

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

CommutatorReport commutator_report(const KernelMatrix& K, const DiffOp& D, const commute::ContourSpec& gamma1,
                                   const CommutatorOptions& opt) {
  const int n = K.grid.size();
  const int threads = thread_count(opt.threads);
  CommutatorReport r;
  r.family = describe_family(gamma1, opt.tests);
  r.operator_text = exactalg::to_text(D);
  r.grid_points = n;
  r.rule_points = K.rule.size();
  r.truncation = std::max(K.grid.truncation, K.rule.truncation);
  r.tail_estimate = K.tail_estimate;
  r.simd_backend = simd::backend_name(simd::active_backend());

  // D_x K(x_i, y_j) = int (D Psi_1)(x_i, z) Psi_2(y_j, z) dz
  const PsiAction act = K.psi1->x_action(D);
  Eigen::MatrixXcd B1(n, K.rule.size());
  for (int i = 0; i < n; ++i) {
    const std::vector<cplx> row = K.psi1->apply_row(act, K.grid.nodes[i], K.rule.nodes);
    for (int q = 0; q < K.rule.size(); ++q) B1(i, q) = row[q];
  }
  const Eigen::MatrixXcd DK = weighted_product(B1, K.A2, K.rule.weights, threads);
  const std::vector<cplx>& w = K.grid.weights;

  for (const TestFunction& f : test_family(gamma1, opt.tests, K.grid.truncation > 0 ? K.grid.truncation : 8.0)) {
    std::vector<cplx> wf(n), wDf(n);
    for (int j = 0; j < n; ++j) {
      wf[j] = f.value(K.grid.nodes[j]);
      wDf[j] = apply(D, f, K.grid.nodes[j]);
    }
    Eigen::VectorXcd dkf(n), kdf(n);
    for (int i = 0; i < n; ++i) {
      std::vector<cplx> dk_row(n), k_row(n);
      for (int j = 0; j < n; ++j) {
        dk_row[j] = DK(i, j);
        k_row[j] = K.K(i, j);
      }
      dkf[i] = simd::dot(dk_row.data(), wf.data(), w.data(), n);
      kdf[i] = simd::dot(k_row.data(), wDf.data(), w.data(), n);
    }
    const double den = norm(dkf) + norm(kdf);
    r.residuals.push_back(den > 0.0 ? norm(dkf - kdf) / den : 0.0);
  }
  r.max_residual = r.residuals.empty() ? 0.0 : *std::max_element(r.residuals.begin(), r.residuals.end());
  r.median_residual = median(r.residuals);

  // Eigen-alignment: phi = K W phi / lambda, so D phi = DK W phi / lambda.
  Eigen::MatrixXcd KW = K.K;
  for (int j = 0; j < n; ++j) KW.col(j) *= w[j];
  const double scale = KW.cwiseAbs().maxCoeff();
  r.kernel_error = K.error_estimate;
  r.eigen_floor = std::max(opt.eigen_floor, opt.resolution * K.error_estimate);
  if (n == 0 || scale == 0.0) return r;
  KW /= scale;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(KW);
  const double sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(KW).singularValues()(0);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::abs(es.eigenvalues()[a]) > std::abs(es.eigenvalues()[b]); });
  const double lmax = std::abs(es.eigenvalues()[order[0]]);
  r.spectral_ratio = sigma > 0.0 ? lmax / sigma : 0.0;
  r.alignment_applicable = r.spectral_ratio >= opt.min_spectral_ratio;
  if (!r.alignment_applicable) {
    r.alignment = NAN;
    return r;
  }
  double off = 0.0, diag = 0.0;
  for (int t = 0; t < std::min(n, opt.eigen_count); ++t) {
    const cplx lambda = es.eigenvalues()[order[t]] * scale;
    if (std::abs(lambda) < r.eigen_floor * lmax * scale || lambda == 0.0) break;
    Eigen::VectorXcd phi = es.eigenvectors().col(order[t]);
    phi /= phi.norm();
    Eigen::VectorXcd wphi(n);
    for (int j = 0; j < n; ++j) wphi[j] = w[j] * phi[j];
    const Eigen::VectorXcd dphi = DK * wphi / lambda;
    const cplx mu = phi.dot(dphi);  // phi has unit norm
    off += (dphi - mu * phi).squaredNorm();
    diag += std::norm(mu);
    ++r.eigen_used;
  }
  r.alignment = diag > 0.0 ? std::sqrt(off / diag) : (off > 0.0 ? INFINITY : 0.0);
  return r;
}

CommutatorReport commutator_report(const KernelMatrix& K, const commute::CommutingSolution& sol,
                                   const commute::ContourSpec& gamma1, const CommutatorOptions& opt) {
  return commutator_report(K, sol.D, gamma1, opt);
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << std::scientific << v;
  return s.str();
}

std::string full(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

std::string to_text(const CommutatorReport& r) {
  std::ostringstream s;
  s << "commutator:\n";
  s << "  operator: \"" << r.operator_text << "\"\n";
  s << "  tests: \"" << r.family << "\"\n";
  s << "  grid_points: " << r.grid_points << "\n";
  s << "  rule_points: " << r.rule_points << "\n";
  s << "  truncation: " << r.truncation << "\n";
  s << "  tail_estimate: " << num(r.tail_estimate) << "\n";
  s << "  simd: " << r.simd_backend << "\n";
  s << "  residuals:\n";
  for (std::size_t k = 0; k < r.residuals.size(); ++k) s << "    - [" << k << ", " << num(r.residuals[k]) << "]\n";
  s << "  max_residual: " << num(r.max_residual) << "\n";
  s << "  median_residual: " << num(r.median_residual) << "\n";
  s << "  kernel_error: " << num(r.kernel_error) << "\n";
  s << "  eigen_floor: " << num(r.eigen_floor) << "\n";
  s << "  spectral_ratio: " << num(r.spectral_ratio) << "\n";
  s << "  eigen_used: " << r.eigen_used << "\n";
  if (r.alignment_applicable)
    s << "  alignment: " << num(r.alignment) << "\n";
  else
    s << "  alignment: not applicable (nearly nilpotent kernel)\n";
  return s.str();
}

std::string kernel_csv(const KernelMatrix& K) {
  std::ostringstream s;
  s << "i,j,x_re,x_im,y_re,y_im,k_re,k_im\n";
  for (int i = 0; i < K.grid.size(); ++i)
    for (int j = 0; j < K.grid.size(); ++j)
      s << i << ',' << j << ',' << full(K.grid.nodes[i].real()) << ',' << full(K.grid.nodes[i].imag()) << ','
        << full(K.grid.nodes[j].real()) << ',' << full(K.grid.nodes[j].imag()) << ',' << full(K.K(i, j).real())
        << ',' << full(K.K(i, j).imag()) << '\n';
  return s.str();
}

std::string residual_csv(const CommutatorReport& r) {
  std::ostringstream s;
  s << "k,residual\n";
  for (std::size_t k = 0; k < r.residuals.size(); ++k) s << k << ',' << full(r.residuals[k]) << '\n';
  return s.str();
}

double byparts_residual(const DiffOp& D, const commute::ContourSpec& c, const TestFunction& f, const TestFunction& g,
                        const RuleOptions& rule) {
  const DiffOp aD = exactalg::adjoint(D);
  const ContourRule qr = contour_rule(c, rule);
  for (const auto& coeff : D.coeffs()) {
    std::vector<cplx> poles;
    if (coeff.den().degree() > 0) poles = commute::roots(coeff.den());
    if (c.passes_through_root(poles)) throw Error(ErrorCode::PoleOnContour, "coefficient of D singular on contour");
  }
  cplx lhs = 0.0, inner = 0.0;
  double mass = 0.0;
  for (int q = 0; q < qr.size(); ++q) {
    const cplx a = qr.weights[q] * apply(D, f, qr.nodes[q]) * g.value(qr.nodes[q]);
    const cplx b = qr.weights[q] * f.value(qr.nodes[q]) * apply(aD, g, qr.nodes[q]);
    lhs += a;
    inner += b;
    mass += std::abs(a) + std::abs(b);
  }
  cplx boundary = 0.0;
  const int jets = std::max(0, D.order());
  for (const auto& e : c.endpoints()) {
    const exactalg::JetForm form = exactalg::boundary_form(D, e.point);
    const cplx xi = e.point.to_complex();
    const cplx val = form.apply(f.jets(xi, jets), g.jets(xi, jets));
    boundary += e.pi == 1 ? -val : val;
  }
  // magnitude of the integrands rather than of the integrals, which may
  // cancel to zero
  const double scale = mass + std::abs(boundary);
  const double diff = std::abs(lhs - boundary - inner);
  return scale > 0.0 ? diff / scale : 0.0;
}

}  // namespace prolate::numverify
