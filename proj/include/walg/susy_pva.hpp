#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "walg/pva.hpp"

namespace walg {

// Operator words Σ c_{n,m} χ^n D^m in normal form, reduced with Dχ = -χD - 2χ².
class ChiDWord {
 public:
  static ChiDWord chi();
  static ChiDWord D();
  static ChiDWord one();
  ChiDWord operator*(const ChiDWord& o) const;
  ChiDWord operator+(const ChiDWord& o) const;
  ChiDWord scaled(const Scalar& s) const;
  bool operator==(const ChiDWord& o) const { return c_ == o.c_; }
  IndetPoly apply(const IndetPoly& x) const;
  const std::map<std::pair<int, int>, Scalar>& coeffs() const { return c_; }
  std::string str() const;

 private:
  void add(int n, int m, const Scalar& s);
  std::map<std::pair<int, int>, Scalar> c_;  // (χ power, D power)
};

// SUSY affine table [ā_χ b̄] = s(a)( \overline{[a,b]} + χ k(a|b) ) on Susy-family generators.
BracketTable susy_affine_table(const LieSuperalgebra& g, const Scalar& k);
SuperPoly susy_var(const LieSuperalgebra& g, int i);
SuperPoly susy_element(const Element& x, const LieSuperalgebra& g);

enum class SusyMasterForm {
  Structural,  // Σ s(·) Y (−s(a))^n (D+χ)^n s(a,u_j) S_{−χ−D}( Σ s(·) X (−s(u_j))^m (D+χ)^m [u_j χ u_i] )
  Printed,     // literal reading of the displayed sum with the left-arrow rule
  Expanded,    // displayed sum with the arrow normalised so {u_{χ+D} v}_→ 1 = {u_χ v}
};

// {a_χ b} by the master formula.
IndetPoly susy_master_bracket(const SuperPoly& a, const SuperPoly& b, const BracketTable& t,
                              SusyMasterForm form = SusyMasterForm::Structural);

// Σ (-D-χ)^n X_n, the skew transform used in [a_χ b] = s(a,b)[b_{-χ-D} a]
IndetPoly susy_skew_transform(const IndetPoly& x);

// [a_χ[b_γ c]] + s(a)[[a_χ b]_{χ+γ} c] + s(a,b)s(a)s(b)[b_γ[a_χ c]] in χ^i γ^j normal form
BiPoly susy_jacobi_defect(const SuperPoly& a, const SuperPoly& b, const SuperPoly& c, const BracketTable& t);

Report check_susy_skew(const BracketTable& t, const Namer& name = default_name);
Report check_susy_jacobi(const BracketTable& t, const Namer& name = default_name);

// Ordinary PVA with ∂ = D² and a_(n)b = (-1)^n a_[2n+1]b.  Each D-flavored generator x
// becomes two Aux generators x and Dx; `to_pva` converts polynomials.
struct ReducedPva {
  BracketTable table;
  std::function<SuperPoly(const SuperPoly&)> to_pva;
  Namer names;
};
ReducedPva reduce_to_pva(const BracketTable& susy, const Namer& name = default_name);

}  // namespace walg
