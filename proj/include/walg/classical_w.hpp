#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walg/dual_bases.hpp"
#include "walg/pva.hpp"

namespace walg {

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Affine PVA (or affine SUSY PVA) written in the chain basis low[j][n];
// variable index = flat position.
struct ReductionContext {
  bool susy = false;
  LieSuperalgebra g;  // user basis
  DualBases b;
  std::vector<ChainIndex> flat;
  std::map<ChainIndex, int> flat_of;
  LieSuperalgebra cg;  // chain basis
  BracketTable affine;
  Element F;  // F, or f for the SUSY reduction

  int grade2(const Var& v) const;
  Var var(int j, int n) const;
  Var gen(int j) const;
  SuperPoly var_poly(int j, int n) const { return SuperPoly::variable(var(j, n)); }
  bool in_p(int j, int n) const { return b.grade2(j, n) <= (susy ? 0 : 1); }
  bool is_correction(int j, int n) const { return n >= 1 && in_p(j, n); }
  bool is_correction(const Var& v) const;
  // Δ = 1 - grade (½ - grade) on chain variables, Δ_q on generator symbols
  Rational weight(const Var& v) const;
  std::function<Rational(const Var&)> weight_fn() const;
  // element of g (user coordinates) as a linear polynomial in chain variables
  SuperPoly element_poly(const Element& x) const;
  // ω(x^♯) in generator symbols
  SuperPoly gen_of(const Element& x) const;
  SuperPoly rho(const SuperPoly& p) const;
  IndetPoly rho(const IndetPoly& p) const;
  SuperPoly pi(const SuperPoly& p) const;
  SuperPoly to_user(const SuperPoly& p) const;
  IndetPoly to_user(const IndetPoly& p) const;
  Namer user_names() const;
  Namer gen_names() const;
  IndetPoly bracket(const SuperPoly& x, const SuperPoly& y) const;
  SuperPoly derive(const SuperPoly& p) const { return susy ? p.D() : p.del(); }
};

ReductionContext make_context(const LieSuperalgebra& g);

struct WGenerator {
  int chain = 0;
  SuperPoly value;  // chain variables
  Rational weight;
  bool linear_matches = false;  // degree-1 part equals gamma_linear
};

// part of p with exactly one correction variable
SuperPoly linear_part(const ReductionContext& ctx, const SuperPoly& p);

SuperPoly gamma_linear(const ReductionContext& ctx, int j);
WGenerator solve_generator(const ReductionContext& ctx, int j);
std::vector<WGenerator> solve_generators(const ReductionContext& ctx);

// ρ{n_λ w} = 0 for the chain basis of g_{>0}
Report check_membership(const ReductionContext& ctx, const WGenerator& w);

SuperPoly rewrite_in_generators(const ReductionContext& ctx, const std::vector<WGenerator>& gens, const SuperPoly& a);
IndetPoly rewrite_in_generators(const ReductionContext& ctx, const std::vector<WGenerator>& gens, const IndetPoly& a);

IndetPoly w_bracket_direct(const ReductionContext& ctx, const std::vector<WGenerator>& gens, int i, int j);
IndetPoly w_bracket_closed(const ReductionContext& ctx, int i, int j);
BracketTable w_table(const ReductionContext& ctx, const std::vector<WGenerator>& gens, bool closed);

}  // namespace walg
