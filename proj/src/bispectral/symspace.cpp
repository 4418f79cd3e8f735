#include "prolate/bispectral/symspace.hpp"

namespace prolate::bispectral {

using exactalg::Matrix;
using exactalg::OpFrame;
using exactalg::Poly;
using exactalg::RatFn;

Matrix pair_matrix(const std::vector<OpPair>& pairs) {
  std::vector<const DiffOp*> xs, zs;
  for (const auto& p : pairs) {
    xs.push_back(&p.x);
    zs.push_back(&p.z);
  }
  const OpFrame fx(xs), fz(zs);
  Matrix m;
  m.reserve(pairs.size());
  for (const auto& p : pairs) {
    exactalg::Vector row = fx.coords(p.x);
    exactalg::Vector rz = fz.coords(p.z);
    row.insert(row.end(), rz.begin(), rz.end());
    m.push_back(std::move(row));
  }
  return m;
}

Matrix SymSpace::matrix() const { return pair_matrix(gens_); }

int SymSpace::rank() const {
  if (!rank_) rank_ = gens_.empty() ? 0 : exactalg::rank(matrix());
  return *rank_;
}

SymSpace operator+(const SymSpace& a, const SymSpace& b) {
  std::vector<OpPair> g = a.gens_;
  g.insert(g.end(), b.gens_.begin(), b.gens_.end());
  return SymSpace(std::move(g));
}

SymSpace sym_filtration(const Family& f, int l1, int l2) {
  const int xstep = f.is_airy() ? 1 : 2;
  std::vector<DiffOp> lx{DiffOp::identity(Var::X)}, lz{DiffOp::identity(Var::Z)};
  const DiffOp bx = base_operator(f, Var::X), bz = base_operator(f, Var::Z);
  for (int k = 1; k <= std::max(l1, l2); ++k) {
    lx.push_back(lx.back() * bx);
    lz.push_back(lz.back() * bz);
  }
  std::vector<OpPair> gens;
  for (int n = 0; n <= l1; ++n) {
    for (int m = 0; m <= l2; ++m) {
      const DiffOp px = DiffOp::function(RatFn(Poly::monomial(1, xstep * m)), Var::X);
      const DiffOp pz = DiffOp::function(RatFn(Poly::monomial(1, xstep * n)), Var::Z);
      const DiffOp& ln = lx[static_cast<std::size_t>(n)];
      const DiffOp& lm = lz[static_cast<std::size_t>(m)];
      gens.push_back({px * ln + ln * px, pz * lm + lm * pz});
    }
  }
  return SymSpace(std::move(gens));
}

}  // namespace prolate::bispectral
