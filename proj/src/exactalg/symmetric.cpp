#include "prolate/exactalg/symmetric.hpp"

#include "prolate/error.hpp"

namespace prolate::exactalg {

bool JetForm::is_zero() const {
  for (const auto& row : B) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

std::complex<double> JetForm::apply(const std::vector<std::complex<double>>& f_jets,
                                    const std::vector<std::complex<double>>& g_jets) const {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < B.size(); ++j) {
    for (std::size_t i = 0; i < B[j].size(); ++i) {
      if (B[j][i].is_zero()) continue;
      acc += B[j][i].to_complex() * f_jets.at(j) * g_jets.at(i);
    }
  }
  return acc;
}

JetForm boundary_form(const DiffOp& d, const GaussianRational& xi) {
  JetForm form;
  form.point = xi;
  const int n = d.is_zero() ? 0 : d.order();
  form.B.assign(static_cast<std::size_t>(n), std::vector<GaussianRational>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k) {
    const RatFn& bk = d.coeff(k);
    if (bk.is_zero()) continue;
    if (!bk.regular_at(xi)) {
      throw Error(ErrorCode::Pole, "coefficient of order " + std::to_string(k) + " singular at " +
                                       to_string(xi));
    }
    // derivs[m] = b_k^(m)(xi), m < k
    std::vector<GaussianRational> derivs;
    RatFn cur = bk;
    for (int m = 0; m < k; ++m) {
      derivs.push_back(cur.eval(xi));
      cur = cur.derivative();
    }
    for (int i = 0; i < k; ++i) {
      const int j = k - i - 1;
      const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
      for (int l = 0; l <= i; ++l) {
        GaussianRational t = derivs[static_cast<std::size_t>(i - l)];
        if (t.is_zero()) continue;
        t = t * GaussianRational(sign * binomial(i, l));
        auto& cell = form.B[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        cell = cell + t;
      }
    }
  }
  return form;
}

DiffOp sandwich(const RatFn& c, int n, Var var) {
  DiffOp dn = DiffOp::derivative(var, n);
  return dn * (DiffOp::function(c, var) * dn);
}

DiffOp SymForm::reconstruct(Var var) const {
  DiffOp d(var);
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[static_cast<std::size_t>(i)].is_zero()) continue;
    d += sandwich(c[static_cast<std::size_t>(i)], i, var);
  }
  return d;
}

SymForm symmetric_form(const DiffOp& d) {
  SymForm sf;
  if (d.is_zero()) return sf;
  if (!is_formally_symmetric(d)) throw Error(ErrorCode::NotSymmetric, "a(D) != D");
  if (d.order() % 2 != 0) throw Error(ErrorCode::OddOrder, "odd order " + std::to_string(d.order()));
  const int n = d.order() / 2;
  sf.c.assign(static_cast<std::size_t>(n) + 1, RatFn());
  DiffOp rest = d;
  for (int i = n; i >= 0 && !rest.is_zero(); --i) {
    if (rest.order() > 2 * i) {
      throw Error(ErrorCode::NotSymmetric, "peeling left an order " + std::to_string(rest.order()) +
                                               " remainder");
    }
    if (rest.order() < 2 * i) continue;
    RatFn ci = rest.coeff(2 * i);
    rest -= sandwich(ci, i, d.var());
    sf.c[static_cast<std::size_t>(i)] = std::move(ci);
  }
  if (!rest.is_zero()) throw Error(ErrorCode::NotSymmetric, "nonzero remainder after peeling");
  return sf;
}

GaussianRational JetCondition::value(const SymForm& sf) const {
  if (k < 0 || k > sf.n()) return {};
  RatFn f = sf.c[static_cast<std::size_t>(k)];
  for (int m = 0; m < i && !f.is_zero(); ++m) f = f.derivative();
  if (f.is_zero()) return {};
  return f.eval(point);
}

std::vector<JetCondition> jet_constraints(const SymForm& sf, const GaussianRational& xi) {
  std::vector<JetCondition> out;
  for (int k = 1; k <= sf.n(); ++k) {
    const RatFn& ck = sf.c[static_cast<std::size_t>(k)];
    if (!ck.is_zero() && !ck.regular_at(xi)) {
      throw Error(ErrorCode::Pole, "c_" + std::to_string(k) + " singular at " + to_string(xi));
    }
    for (int i = 0; i < k; ++i) out.push_back({k, i, xi});
  }
  return out;
}

std::vector<GaussianRational> jet_values(const SymForm& sf, const GaussianRational& xi, int n_max) {
  std::vector<GaussianRational> out;
  for (int k = 1; k <= n_max; ++k) {
    RatFn f = k <= sf.n() ? sf.c[static_cast<std::size_t>(k)] : RatFn();
    if (!f.is_zero() && !f.regular_at(xi)) {
      throw Error(ErrorCode::Pole, "c_" + std::to_string(k) + " singular at " + to_string(xi));
    }
    for (int i = 0; i < k; ++i) {
      out.push_back(f.is_zero() ? GaussianRational() : f.eval(xi));
      if (!f.is_zero()) f = f.derivative();
    }
  }
  return out;
}

bool jet_conditions_hold(const SymForm& sf, const GaussianRational& xi) {
  for (const auto& c : jet_constraints(sf, xi)) {
    if (!c.value(sf).is_zero()) return false;
  }
  return true;
}

}  // namespace prolate::exactalg
