#include "prolate/commute/contour.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "prolate/error.hpp"

namespace prolate::commute {

namespace {

GaussianRational point_from_yaml(const YAML::Node& n) {
  if (!n.IsSequence() || n.size() != 2) throw Error(ErrorCode::InvalidContour, "point must be [re, im]");
  return {exactalg::parse_rational(n[0].as<std::string>()), exactalg::parse_rational(n[1].as<std::string>())};
}

double dist_to_segment(std::complex<double> p, std::complex<double> a, std::complex<double> b) {
  const std::complex<double> ab = b - a;
  double t = std::real((p - a) * std::conj(ab)) / std::norm(ab);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double dist_to_ray(std::complex<double> p, std::complex<double> a, std::complex<double> dir) {
  const double t = std::max(0.0, std::real((p - a) * std::conj(dir)));
  return std::abs(p - (a + t * dir));
}

int normalize_deg(int d) { return ((d % 360) + 540) % 360 - 180; }

}  // namespace

std::complex<double> Piece::direction() const {
  const double th = static_cast<double>(*ray_dir_deg) * std::numbers::pi / 180.0;
  return {std::cos(th), std::sin(th)};
}

ContourSpec::ContourSpec(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

ContourSpec ContourSpec::segment(const GaussianRational& a, const GaussianRational& b) {
  return ContourSpec({Piece{a, b, std::nullopt}});
}

ContourSpec ContourSpec::polyline(const std::vector<GaussianRational>& points) {
  std::vector<Piece> p;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) p.push_back({points[i], points[i + 1], std::nullopt});
  return ContourSpec(std::move(p));
}

ContourSpec ContourSpec::ray(const GaussianRational& start, int dir_deg) {
  return ContourSpec({Piece{start, std::nullopt, dir_deg}});
}

ContourSpec ContourSpec::from_yaml(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::Config, std::string("yaml: ") + e.what());
  }
  if (!root.IsSequence() || root.size() == 0) throw Error(ErrorCode::InvalidContour, "contour must be a nonempty list");
  std::vector<Piece> pieces;
  try {
    for (const auto& n : root) {
      if (!n["from"]) throw Error(ErrorCode::InvalidContour, "piece without 'from'");
      Piece p;
      p.from = point_from_yaml(n["from"]);
      if (n["to"] && n["ray"]) throw Error(ErrorCode::InvalidContour, "piece with both 'to' and 'ray'");
      if (n["to"]) {
        p.to = point_from_yaml(n["to"]);
      } else if (n["ray"]) {
        p.ray_dir_deg = n["ray"]["dir_deg"].as<int>();
      } else {
        throw Error(ErrorCode::InvalidContour, "piece needs 'to' or 'ray'");
      }
      pieces.push_back(std::move(p));
    }
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::InvalidContour, std::string("yaml: ") + e.what());
  }
  return ContourSpec(std::move(pieces));
}

bool ContourSpec::finite() const {
  for (const auto& p : pieces_) {
    if (p.is_ray()) return false;
  }
  return true;
}

std::vector<Endpoint> ContourSpec::endpoints() const {
  std::vector<Endpoint> out;
  if (pieces_.empty()) return out;
  out.push_back({pieces_.front().from, 1});
  const Piece& last = pieces_.back();
  if (!last.is_ray()) {
    if (*last.to == pieces_.front().from) return {};  // closed loop
    out.push_back({*last.to, 0});
  }
  return out;
}

bool ContourSpec::symmetric() const {
  const auto e = endpoints();
  for (const auto& a : e) {
    bool found = false;
    for (const auto& b : e) found = found || b.point == -a.point;
    if (!found) return false;
  }
  return true;
}

void ContourSpec::validate(const bispectral::Family& f) const {
  if (pieces_.empty()) throw Error(ErrorCode::InvalidContour, "empty contour");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.is_ray()) {
      if (i + 1 != pieces_.size()) throw Error(ErrorCode::InvalidContour, "a ray must be the last piece");
      if (f.is_bessel()) throw Error(ErrorCode::InvalidContour, "Bessel contours must be finite");
      if (std::abs(normalize_deg(*p.ray_dir_deg)) >= 60) {
        throw Error(ErrorCode::InvalidContour, "ray leaves the decay sector |arg| < 60 deg");
      }
    } else {
      if (*p.to == p.from) throw Error(ErrorCode::InvalidContour, "degenerate segment");
      if (i + 1 < pieces_.size() && pieces_[i + 1].from != *p.to) {
        throw Error(ErrorCode::InvalidContour, "pieces do not form a chain");
      }
    }
  }
}

bool ContourSpec::passes_through_root(const std::vector<std::complex<double>>& roots) const {
  constexpr double tol = 1e-12;
  for (const auto& r : roots) {
    for (const auto& p : pieces_) {
      const double d = p.is_ray() ? dist_to_ray(r, p.from.to_complex(), p.direction())
                                  : dist_to_segment(r, p.from.to_complex(), p.to->to_complex());
      if (d <= tol * (1.0 + std::abs(r))) return true;
    }
  }
  return false;
}

std::string ContourSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (i == 0) os << exactalg::to_string(p.from);
    if (p.is_ray()) {
      os << " -> inf(" << *p.ray_dir_deg << "deg)";
    } else {
      os << " -> " << exactalg::to_string(*p.to);
    }
  }
  return os.str();
}

}  // namespace prolate::commute
