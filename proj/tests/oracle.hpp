#pragma once

// Brackets computed only from the axioms (right Leibniz, sesquilinearity,
// skew-symmetry) and the generator table.  Independent of the master formulas.

#include <random>

#include "walg/pva.hpp"
#include "walg/susy_pva.hpp"

namespace oracle {

using namespace walg;

inline IndetPoly lam_bracket(const SuperPoly& f, const SuperPoly& g, const BracketTable& t);

// {f_λ u} for a single generator-derivative u, f a monomial with coefficient 1
inline IndetPoly lam_left_var(const SuperPoly& f, const Var& u, const BracketTable& t) {
  if (f.size() == 1 && f.terms().begin()->first.size() == 1) {
    Var v = f.terms().begin()->first[0];
    // {∂^m v_λ ∂^n u} = (-λ)^m (λ+∂)^n {v_λ u}
    const IndetPoly* T = t.get(v, u);
    IndetPoly r = T ? *T : IndetPoly(Indet::Lambda);
    for (int i = 0; i < u.order(); ++i) r = r.lambda_plus_del();
    for (int i = 0; i < v.order(); ++i) r = r.shifted(1).scaled(Scalar(-1));
    return r;
  }
  // skew-symmetry: {f_λ u} = -s(f,u){u_{-λ-∂} f}
  IndetPoly x = lam_bracket(SuperPoly::variable(u), f, t);
  IndetPoly r = skew_transform(x);
  return (f.parity() * u.parity()) % 2 ? r : -r;
}

inline IndetPoly lam_bracket(const SuperPoly& f, const SuperPoly& g, const BracketTable& t) {
  IndetPoly out(Indet::Lambda);
  for (auto& [mf, cf] : f.terms()) {
    if (mf.empty()) continue;
    SuperPoly F = SuperPoly::monomial(mf, Scalar(1));
    for (auto& [mg, cg] : g.terms()) {
      if (mg.empty()) continue;
      IndetPoly r(Indet::Lambda);
      if (mg.size() == 1) {
        r = lam_left_var(F, mg[0], t);
      } else {
        // {F_λ x·rest} = {F_λ x} rest + s(F,x) x {F_λ rest}
        SuperPoly x = SuperPoly::variable(mg[0]);
        SuperPoly rest = SuperPoly::monomial(Monomial(mg.begin() + 1, mg.end()), Scalar(1));
        r = lam_left_var(F, mg[0], t).right_mul(rest);
        IndetPoly second = lam_bracket(F, rest, t).left_mul(x);
        r += (F.parity() * mg[0].parity()) % 2 ? -second : second;
      }
      out += r.scaled(cf * cg);
    }
  }
  return out;
}

inline IndetPoly chi_bracket(const SuperPoly& f, const SuperPoly& g, const BracketTable& t);

// {F_χ u} for a base generator u, F a monomial with coefficient 1
inline IndetPoly chi_left_base(const SuperPoly& F, const Var& u, const BracketTable& t) {
  if (F.size() == 1 && F.terms().begin()->first.size() == 1) {
    Var v = F.terms().begin()->first[0];
    // [D^m v_χ u] = χ^m [v_χ u]
    const IndetPoly* T = t.get(v, u);
    return T ? T->shifted(v.order()) : IndetPoly(Indet::Chi);
  }
  // [F_χ u] = s(F,u)[u_{-χ-D} F]
  IndetPoly r = susy_skew_transform(chi_bracket(SuperPoly::variable(u), F, t));
  return (F.parity() * u.parity()) % 2 ? -r : r;
}

inline IndetPoly chi_left_var(const SuperPoly& F, const Var& x, const BracketTable& t) {
  // [F_χ D u] = -s(F)(D+χ)[F_χ u]
  IndetPoly r = chi_left_base(F, x.base(), t);
  for (int i = 0; i < x.order(); ++i) {
    r = r.D_plus_chi();
    if (F.parity() % 2 == 0) r = -r;
  }
  return r;
}

inline IndetPoly chi_bracket(const SuperPoly& f, const SuperPoly& g, const BracketTable& t) {
  IndetPoly out(Indet::Chi);
  for (auto& [mf, cf] : f.terms()) {
    if (mf.empty()) continue;
    SuperPoly F = SuperPoly::monomial(mf, Scalar(1));
    for (auto& [mg, cg] : g.terms()) {
      if (mg.empty()) continue;
      IndetPoly r(Indet::Chi);
      if (mg.size() == 1) {
        r = chi_left_var(F, mg[0], t);
      } else {
        // {F_χ x·rest} = {F_χ x} rest + s(x, rest){F_χ rest} x
        SuperPoly x = SuperPoly::variable(mg[0]);
        SuperPoly rest = SuperPoly::monomial(Monomial(mg.begin() + 1, mg.end()), Scalar(1));
        r = chi_left_var(F, mg[0], t).right_mul(rest);
        IndetPoly second = chi_bracket(F, rest, t).right_mul(x);
        r += (mg[0].parity() * rest.parity()) % 2 ? -second : second;
      }
      out += r.scaled(cf * cg);
    }
  }
  return out;
}

// dim ker ad x from the structure constants
inline int dim_kernel_ad(const LieSuperalgebra& g, const Element& x) {
  Matrix m(g.dim(), std::vector<Scalar>(g.dim()));
  for (int b = 0; b < g.dim(); ++b) {
    Element y = g.bracket(x, g.basis(b));
    for (int a = 0; a < g.dim(); ++a) m[a][b] = y[a];
  }
  return g.dim() - rank(m, g.dim());
}

using walg::random_poly;

}  // namespace oracle
