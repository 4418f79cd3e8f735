#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>

#include "prolate/commute/contour.hpp"
#include "prolate/numverify/psi.hpp"
#include "prolate/numverify/quadrature.hpp"

namespace prolate::numverify {

/// Single: K(x,y) = int Psi(x,z) Psi(y,z) dz for Darboux data.
/// ExpPair: Psi_1 = e^{xz}, Psi_2 = e^{-xz}.
/// BesselPair: Psi_1 from the first-kind base function, Psi_2 from the
/// second kind. Both share the bispectral map, so the same D commutes. The
/// single kernel vanishes identically whenever Psi(x,z) Psi(y,z) is odd and
/// entire in z and Gamma_2 has endpoints -a, a (nu + 1/2 odd).
enum class KernelKind { Single, ExpPair, BesselPair };

std::string to_string(KernelKind k);
KernelKind parse_kernel_kind(const std::string& s);

struct KernelSetup {
  KernelKind kind = KernelKind::Single;
  commute::ContourSpec gamma1;
  commute::ContourSpec gamma2;
  RuleOptions grid;
  RuleOptions rule;
  /// Largest admissible tail estimate relative to max |K|.
  double tail_tolerance = 1e-8;
  /// Worker threads for assembly; 0 reads PROLATE_THREADS (default 1).
  int threads = 0;
};

struct KernelMatrix {
  KernelKind kind = KernelKind::Single;
  ContourRule grid;  // Gamma_1 nodes and weights
  ContourRule rule;  // Gamma_2 rule
  Eigen::MatrixXcd K;
  /// Psi_1(x_i, z_q) and Psi_2(x_j, z_q).
  Eigen::MatrixXcd A1;
  Eigen::MatrixXcd A2;
  /// Estimated contribution of the truncated ray tails relative to max |K|.
  double tail_estimate = 0.0;
  /// max |K - K'| / max |K| against a Gamma_2 rule of higher order.
  double error_estimate = 0.0;
  std::shared_ptr<const PsiEvaluator> psi1;
  std::shared_ptr<const PsiEvaluator> psi2;
};

int thread_count(int requested);

/// Rejects poles of v on Gamma_1 and of N on Gamma_2 (PoleOnContour) and
/// tails above tolerance (TruncationTail).
KernelMatrix kernel_matrix(const darboux::DarbouxData& d, const KernelSetup& s);

/// M(i, j) = sum_q B1(i, q) w_q B2(j, q), rows assembled in parallel with a
/// fixed summation order per entry.
Eigen::MatrixXcd weighted_product(const Eigen::MatrixXcd& B1, const Eigen::MatrixXcd& B2,
                                  const std::vector<cplx>& w, int threads);

}  // namespace prolate::numverify
