#include "prolate/exactalg/linalg.hpp"

#include <algorithm>

#include "prolate/error.hpp"

namespace prolate::exactalg {

Rref rref(Matrix m, int ncols) {
  Rref out;
  if (ncols < 0) ncols = m.empty() ? 0 : static_cast<int>(m.front().size());
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][static_cast<std::size_t>(c)]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][static_cast<std::size_t>(c)];
    for (auto& e : m[r]) {
      if (sgn(e) != 0) e *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const Rational f = m[i][static_cast<std::size_t>(c)];
      if (sgn(f) == 0) continue;
      for (std::size_t j = static_cast<std::size_t>(c); j < m[i].size(); ++j) {
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& m, int ncols) {
  const Rref r = rref(m, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector u(static_cast<std::size_t>(ncols), Rational(0));
    u[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      u[static_cast<std::size_t>(r.pivots[i])] = -r.rows[i][static_cast<std::size_t>(f)];
    }
    out.push_back(std::move(u));
  }
  return out;
}

OpFrame::OpFrame(const std::vector<const DiffOp*>& ops) : den_(Poly::one()) {
  for (const DiffOp* d : ops) {
    if (d->is_zero()) continue;
    max_order_ = std::max(max_order_, d->order());
    for (const auto& c : d->coeffs()) {
      if (!c.is_zero()) den_ = lcm(den_, c.den());
    }
  }
  for (const DiffOp* d : ops) {
    if (d->is_zero()) continue;
    for (const auto& c : d->coeffs()) {
      if (c.is_zero()) continue;
      const int deg = (c.num() * divexact(den_, c.den())).degree();
      max_degree_ = std::max(max_degree_, deg);
    }
  }
}

Vector OpFrame::coords(const DiffOp& d) const {
  Vector out(static_cast<std::size_t>(width()), Rational(0));
  if (d.is_zero()) return out;
  if (d.order() > max_order_) throw Error(ErrorCode::Overflow, "operator order exceeds frame");
  for (int k = 0; k <= d.order(); ++k) {
    const RatFn& c = d.coeff(k);
    if (c.is_zero()) continue;
    const auto [q, rem] = divmod(den_, c.den());
    if (!rem.is_zero()) throw Error(ErrorCode::Overflow, "denominator outside frame");
    const Poly p = c.num() * q;
    if (p.degree() > max_degree_) throw Error(ErrorCode::Overflow, "degree exceeds frame");
    for (int e = 0; e <= p.degree(); ++e) {
      out[static_cast<std::size_t>(column(k, e))] = p.coeff(e);
    }
  }
  return out;
}

DiffOp OpFrame::op(const Vector& coords, Var var, std::size_t offset) const {
  DiffOp out(var);
  for (int k = 0; k <= max_order_; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree_) + 1);
    for (int p = 0; p <= max_degree_; ++p) c[static_cast<std::size_t>(p)] = coords.at(offset + static_cast<std::size_t>(column(k, p)));
    Poly num(c);
    if (!num.is_zero()) out.add_term(RatFn(num, den_), k);
  }
  return out;
}

}  // namespace prolate::exactalg
