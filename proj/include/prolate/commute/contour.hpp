#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "prolate/bispectral/family.hpp"
#include "prolate/exactalg/rational.hpp"

namespace prolate::commute {

using exactalg::GaussianRational;

/// Oriented segment from -> to, or a ray from `from` to infinity in the
/// direction dir_deg (degrees).
struct Piece {
  GaussianRational from;
  std::optional<GaussianRational> to;
  std::optional<int> ray_dir_deg;

  bool is_ray() const { return ray_dir_deg.has_value(); }
  std::complex<double> direction() const;
};

struct Endpoint {
  GaussianRational point;
  /// 1 at the start of the chain, 0 at its end.
  int pi = 0;
};

class ContourSpec {
 public:
  ContourSpec() = default;
  explicit ContourSpec(std::vector<Piece> pieces);

  static ContourSpec segment(const GaussianRational& a, const GaussianRational& b);
  static ContourSpec polyline(const std::vector<GaussianRational>& points);
  static ContourSpec ray(const GaussianRational& start, int dir_deg);
  /// YAML sequence of {from: [re, im], to: [re, im]} or
  /// {from: [re, im], ray: {dir_deg: d}}.
  static ContourSpec from_yaml(const std::string& text);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool finite() const;
  std::vector<Endpoint> endpoints() const;
  /// e(G) = -e(G) as a set.
  bool symmetric() const;
  /// Connected chain, rays only at the end and inside the decay sector
  /// |arg| < 60 deg for Airy, finite chains for Bessel. Throws
  /// InvalidContour.
  void validate(const bispectral::Family& f) const;
  /// True if some root of p (in the contour variable) lies on the contour.
  bool passes_through_root(const std::vector<std::complex<double>>& roots) const;

  std::string to_string() const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace prolate::commute
