#include "prolate/numverify/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "prolate/error.hpp"

namespace prolate::numverify {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::Config, "quadrature order must be positive");
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

ContourRule contour_rule(const commute::ContourSpec& c, const RuleOptions& opt) {
  if (opt.points < 1 || opt.panel_order < 1) throw Error(ErrorCode::Config, "empty quadrature grid");
  struct Seg {
    cplx a, b;
  };
  std::vector<Seg> segs;
  ContourRule out;
  for (const auto& p : c.pieces()) {
    const cplx a = p.from.to_complex();
    if (p.is_ray()) {
      segs.push_back({a, a + opt.ray_length * p.direction()});
      out.truncation = opt.ray_length;
    } else {
      segs.push_back({a, p.to->to_complex()});
    }
  }
  double total = 0.0;
  for (const auto& s : segs) total += std::abs(s.b - s.a);
  if (total == 0.0) throw Error(ErrorCode::InvalidContour, "contour of zero length");

  // panels per segment in proportion to arclength, at least one each
  const int panels_total = std::max<int>(segs.size(), (opt.points + opt.panel_order - 1) / opt.panel_order);
  std::vector<int> panels(segs.size(), 1);
  int assigned = static_cast<int>(segs.size());
  while (assigned < panels_total) {
    std::size_t best = 0;
    double best_len = -1.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const double h = std::abs(segs[i].b - segs[i].a) / panels[i];
      if (h > best_len) {
        best_len = h;
        best = i;
      }
    }
    ++panels[best];
    ++assigned;
  }
  const GaussRule g = gauss_legendre(opt.panel_order);
  for (std::size_t s = 0; s < segs.size(); ++s) {
    const cplx step = (segs[s].b - segs[s].a) / static_cast<double>(panels[s]);
    for (int k = 0; k < panels[s]; ++k) {
      const cplx a = segs[s].a + step * static_cast<double>(k);
      for (std::size_t q = 0; q < g.nodes.size(); ++q) {
        out.nodes.push_back(a + step * (0.5 * (g.nodes[q] + 1.0)));
        out.weights.push_back(step * (0.5 * g.weights[q]));
      }
    }
  }
  return out;
}

}  // namespace prolate::numverify
