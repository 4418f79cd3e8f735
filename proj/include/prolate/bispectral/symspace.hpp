#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prolate/bispectral/family.hpp"
#include "prolate/exactalg/linalg.hpp"

namespace prolate::bispectral {

/// An operator and its z-side partner.
struct OpPair {
  DiffOp x;
  DiffOp z;
};

/// Span of generator pairs, measured over the concatenated x- and z-side
/// monomial frames.
class SymSpace {
 public:
  SymSpace() = default;
  explicit SymSpace(std::vector<OpPair> gens) : gens_(std::move(gens)) {}

  const std::vector<OpPair>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  /// Coefficient matrix, one row per generator.
  exactalg::Matrix matrix() const;
  int rank() const;

  /// Generators of both spaces (the sum of spans).
  friend SymSpace operator+(const SymSpace& a, const SymSpace& b);

 private:
  std::vector<OpPair> gens_;
  mutable std::optional<int> rank_;
};

/// Matrix of pairs over a shared frame built from exactly these pairs.
exactalg::Matrix pair_matrix(const std::vector<OpPair>& pairs);

/// Generators x^m L^n + L^n x^m (Airy) or x^{2m} L^n + L^n x^{2m} (Bessel),
/// n <= l1, m <= l2, with z-side partners z^n L(z)^m + L(z)^m z^n
/// (z^{2n} for Bessel).
SymSpace sym_filtration(const Family& f, int l1, int l2);

}  // namespace prolate::bispectral
