#pragma once

#include <complex>
#include <vector>

#include "prolate/commute/contour.hpp"

namespace prolate::numverify {

using cplx = std::complex<double>;

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Nodes along an oriented contour with complex weights that include dz.
struct ContourRule {
  std::vector<cplx> nodes;
  std::vector<cplx> weights;
  /// Radius at which rays were cut off (0 for finite contours).
  double truncation = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }
};

struct RuleOptions {
  /// Total number of nodes, split over the pieces in proportion to length.
  int points = 100;
  /// Gauss-Legendre order per panel.
  int panel_order = 20;
  /// Rays are replaced by the segment of this length from their start.
  double ray_length = 8.0;
};

ContourRule contour_rule(const commute::ContourSpec& c, const RuleOptions& opt);

}  // namespace prolate::numverify
