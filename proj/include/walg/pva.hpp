#pragma once

#include <map>
#include <string>
#include <vector>

#include "walg/indet.hpp"
#include "walg/lie.hpp"

namespace walg {

// Brackets of generators; keyed by base variables.  Used for both flavors.
struct BracketTable {
  Indet kind = Indet::Lambda;
  std::vector<Var> generators;
  std::map<std::pair<uint64_t, uint64_t>, IndetPoly> entries;

  const IndetPoly* get(const Var& a, const Var& b) const;
  void set(const Var& a, const Var& b, const IndetPoly& v);
};

struct Report {
  std::vector<std::string> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
  void fail(const std::string& s) { failures.push_back(s); }
  void merge(const Report& o) {
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    checked += o.checked;
  }
};

// Affine PVA: {a_λ b} = [a,b] + kλ(a|b) on Affine-family generators indexed by the basis.
BracketTable affine_table(const LieSuperalgebra& g, const Scalar& k);
SuperPoly affine_var(const LieSuperalgebra& g, int i);
SuperPoly affine_element(const Element& x, const LieSuperalgebra& g);

enum class MasterSign {
  Corrected,  // s(f,g)s(u_i,u_j)s(g,u_j)s(u_j)
  Printed,    // s(f,g)s(u_i,u_j)s(g,u_i)s(u_i)
};

// {f_λ g} by the master formula.
IndetPoly master_bracket(const SuperPoly& f, const SuperPoly& g, const BracketTable& t,
                         MasterSign sign = MasterSign::Corrected);

// {b_{-λ-∂} a} given {a_λ b}: Σ (-λ-∂)^n X_n
IndetPoly skew_transform(const IndetPoly& x);

// [a_λ[b_μ c]] - [[a_λ b]_{λ+μ} c] - s(a,b)[b_μ[a_λ c]]
BiPoly jacobi_defect(const SuperPoly& a, const SuperPoly& b, const SuperPoly& c, const BracketTable& t);

Report check_skew(const BracketTable& t, const Namer& name = default_name);
Report check_jacobi(const BracketTable& t, const Namer& name = default_name);

// the λ^n coefficient of {a_λ b} must have weight Δa + Δb - n - 1
Report check_bracket_weights(const BracketTable& t, const std::function<Rational(const Var&)>& weight,
                             const Namer& name = default_name);

}  // namespace walg
