#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prolate/commute/contour.hpp"
#include "prolate/darboux/spaces.hpp"
#include "prolate/exactalg/symmetric.hpp"

namespace prolate::commute {

using bispectral::OpPair;
using darboux::DarbouxData;
using exactalg::DiffOp;
using exactalg::Matrix;
using exactalg::Rational;

enum class CountingMode { I, II };

struct CountingResult {
  bool predicted = false;
  CountingMode mode = CountingMode::I;
  /// (l1+1)(l2+1) - rho1 rho2
  int estimate = 0;
  /// l1(l1+1)|e1|/q + l2(l2+1)|e2|/q with q = 2 (I) or 4 (II)
  Rational bound{0};
};

/// Numeric roots of p (Eigen companion solver).
std::vector<std::complex<double>> roots(const exactalg::Poly& p);
/// Roots of every denominator that can appear on the given side: v(x) or
/// N(z), together with 0 for Bessel data with nu(nu+1) != 0.
std::vector<std::complex<double>> singular_points(const DarbouxData& d, exactalg::Var side);

/// Mode II is used for Bessel data when both contours satisfy e = -e.
CountingResult counting_condition(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2, int l1,
                                  int l2);

struct LinearSystem {
  /// Independent generators of S1 + S2; unknowns are coordinates over them.
  std::vector<OpPair> basis;
  std::vector<exactalg::SymForm> sym_x;
  std::vector<exactalg::SymForm> sym_z;
  /// Rows over Q (real and imaginary parts of each jet condition).
  Matrix rows;
  /// Endpoints at which conditions were imposed.
  std::vector<GaussianRational> x_points;
  std::vector<GaussianRational> z_points;
  bool halved = false;

  int unknowns() const { return static_cast<int>(basis.size()); }
};

/// Validates the contours, rejects poles on them (PoleOnContour) and builds
/// the jet conditions at every endpoint on both sides.
LinearSystem assemble_system(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2, int l1, int l2);

struct EndpointCertificate {
  GaussianRational point;
  char side = 'x';
  bool form_zero = false;
};

struct CommutingSolution {
  DiffOp D{exactalg::Var::X};
  DiffOp S{exactalg::Var::Z};
  int l1 = 0;
  int l2 = 0;
  /// Dimension of the solution space modulo constants.
  int solution_dim = 0;
  CountingResult counting;
  exactalg::SymForm sym_x;
  exactalg::SymForm sym_z;
  std::vector<EndpointCertificate> certificates;

  bool certified() const;
};

struct Search {
  bool minimal = true;
  int l1 = 0;
  int l2 = 0;
  /// Largest l1 + l2 tried by the minimal search.
  int budget = 14;

  static Search fixed(int l1, int l2) { return {false, l1, l2, 14}; }
};

/// Fixed search throws NoNonconstantSolution; minimal search walks (l1,l2)
/// by l1+l2, then |l1-l2|, then l1, and throws SearchBudgetExceeded.
CommutingSolution solve_commuting(const DarbouxData& d, const ContourSpec& g1, const ContourSpec& g2,
                                  const Search& search);

/// Canonical nonconstant element of span(solutions + {1}); nullopt when the
/// span has only constants.
std::optional<OpPair> canonical_representative(const std::vector<OpPair>& solutions, int* dim_mod_constants = nullptr);

/// YAML report: D, S in operator text, symmetric forms, l1, l2, dimension,
/// counting data, certificates and a digest.
std::string report(const CommutingSolution& s);

/// FNV-1a 64-bit digest, hex.
std::string digest(const std::string& text);

}  // namespace prolate::commute
