#pragma once

#include <string>
#include <vector>

#include "prolate/commute/solve.hpp"
#include "prolate/numverify/kernel.hpp"

namespace prolate::numverify {

/// f(x) = p(u) exp(-gauss u^2 / 2) with u = alpha (x - center).
struct TestFunction {
  exactalg::Poly p = exactalg::Poly::one();
  exactalg::Rational gauss{1};
  cplx center = 0.0;
  cplx alpha = 1.0;

  /// f^(j)(x), j = 0..n, from exact derivatives of p(u) e^{-g u^2/2}.
  std::vector<cplx> jets(cplx x, int n) const;
  cplx value(cplx x) const { return jets(x, 0)[0]; }
};

/// u^k e^{-u^2/2} for k < count, with u mapping the endpoints of a finite
/// contour to -1 and 1, or u = 12 (x - start) / T along a ray cut at T so
/// that even u^19 e^{-u^2/2} is below double precision at the cut.
std::vector<TestFunction> test_family(const commute::ContourSpec& c, int count, double ray_length);
std::string describe_family(const commute::ContourSpec& c, int count);

/// (D f)(x) from the jets of f.
cplx apply(const exactalg::DiffOp& D, const TestFunction& f, cplx x);

struct CommutatorOptions {
  int tests = 20;
  int eigen_count = 20;
  /// Eigenpairs with |lambda| below this fraction of the largest are skipped.
  double eigen_floor = 1e-9;
  /// Also skipped: |lambda| below resolution * (kernel error estimate) *
  /// max |lambda|, since D phi = DK W phi / lambda amplifies kernel noise by
  /// 1/lambda.
  double resolution = 1e6;
  /// Alignment is not computed when the spectral radius of K W is below
  /// this fraction of its norm; eigenvectors of such nearly nilpotent
  /// matrices are not numerically meaningful.
  double min_spectral_ratio = 1e-3;
  int threads = 0;
};

struct CommutatorReport {
  std::string family;
  std::string operator_text;
  int grid_points = 0;
  int rule_points = 0;
  double truncation = 0.0;
  double tail_estimate = 0.0;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double median_residual = 0.0;
  /// Residual of D phi_n against phi_n over the top eigenvectors of K,
  /// relative to the diagonal part.
  double alignment = 0.0;
  int eigen_used = 0;
  /// Spectral radius of K W over its largest singular value.
  double spectral_ratio = 0.0;
  bool alignment_applicable = false;
  double eigen_floor = 0.0;
  double kernel_error = 0.0;
  std::string simd_backend;
};

/// Residuals |(DK - KD) f| / (|DKf| + |KDf|) with D applied analytically to
/// the kernel (via Psi) and to the test functions, K by quadrature on Gamma_1.
CommutatorReport commutator_report(const KernelMatrix& K, const exactalg::DiffOp& D, const commute::ContourSpec& gamma1,
                                   const CommutatorOptions& opt = {});
CommutatorReport commutator_report(const KernelMatrix& K, const commute::CommutingSolution& sol,
                                   const commute::ContourSpec& gamma1, const CommutatorOptions& opt = {});

std::string to_text(const CommutatorReport& r);
/// Rows "i,j,re,im" of K with the node coordinates.
std::string kernel_csv(const KernelMatrix& K);
std::string residual_csv(const CommutatorReport& r);

/// |int (Df) g - [sum (-1)^pi phi_xi(D)(f, g) + int f (aD g)]| relative to
/// the integrated magnitudes of the terms. Rays are cut at rule.ray_length. Throws
/// PoleOnContour when a coefficient of D is singular on the contour.
double byparts_residual(const exactalg::DiffOp& D, const commute::ContourSpec& c, const TestFunction& f,
                        const TestFunction& g, const RuleOptions& rule = {200, 20, 8.0});

}  // namespace prolate::numverify
