#pragma once

#include <vector>

#include "prolate/exactalg/diffop.hpp"

namespace prolate::exactalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form; rows are the nonzero rows only.
struct Rref {
  Matrix rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
};

/// Gauss-Jordan elimination over Q. `ncols` fixes the width when m is empty.
Rref rref(Matrix m, int ncols = -1);
int rank(const Matrix& m);
/// Basis of {u : m u = 0}, one vector per free column, in column order.
Matrix nullspace(const Matrix& m, int ncols);

/// Coordinates of operators in one variable over the monomial frame
/// {v^p d^k}: every operator is multiplied by the shared common denominator
/// L(v) first, so coordinates are linear in the operator. Columns run over
/// k descending, then p descending.
class OpFrame {
 public:
  explicit OpFrame(const std::vector<const DiffOp*>& ops);

  int width() const { return (max_order_ + 1) * (max_degree_ + 1); }
  int max_order() const { return max_order_; }
  const Poly& denominator() const { return den_; }
  /// Column of the monomial v^p d^k.
  int column(int k, int p) const { return (max_order_ - k) * (max_degree_ + 1) + (max_degree_ - p); }
  /// Coordinates; the operator must be in the span the frame was built for.
  Vector coords(const DiffOp& d) const;
  /// Inverse of coords on the first width() entries starting at `offset`.
  DiffOp op(const Vector& coords, Var var, std::size_t offset = 0) const;

 private:
  Poly den_;
  int max_order_ = 0;
  int max_degree_ = 0;
};

}  // namespace prolate::exactalg
