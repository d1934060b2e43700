#pragma once

#include <map>
#include <vector>

#include "walg/classical_w.hpp"

namespace walg {

// C(ḡ,f): j_ā (Susy family, user index), φ_α (Ghost) and φ^ᾱ (GhostBar) for a graded
// basis u_α of n and the dual basis u^α of n_-, (u^α|u_β) = δ.
// p(φ_α) = p(u_α), p(φ^ᾱ) = p(u_α) + 1, so d is even.
struct BrstComplex {
  LieSuperalgebra g;
  std::vector<int> u;          // user indices of u_α
  std::vector<Element> udual;  // u^α
  BracketTable table;
  ReductionContext chains;  // odd chain basis; J variables use its flat index

  int nghosts() const { return static_cast<int>(u.size()); }
  Var j(int a) const;
  Var phi(int al) const;
  Var phibar(int al) const;
  Var block(int t) const;
  SuperPoly j_of(const Element& x) const;
  SuperPoly phi_of(const Element& x) const;     // φ_{π+ x}
  SuperPoly phibar_of(const Element& x) const;  // φ^{π- x}‾
  // J_ā = j_ā - Σ_β s(a,β)s(a)s(β) φ^β̄ φ_{[u_β,a]} for homogeneous a
  SuperPoly building_block(const Element& a) const;
  Namer names() const;
};

BrstComplex build_complex(const LieSuperalgebra& g, const Scalar& k = Scalar::k());
// d = Σ (j_ᾱ - c(f|u_α)) φ^ᾱ + ½ Σ s(α,β)s(β) φ_{[u_α,u_β]} φ^β̄ φ^ᾱ
SuperPoly build_d(const BrstComplex& cx, const Scalar& c);

// odd derivation given on base variables, extended by d(D A) = -D d(A)
struct OddDerivation {
  std::map<uint64_t, SuperPoly> images;
  SuperPoly operator()(const SuperPoly& a) const;
};

// d_[0] = {d_χ ·}|_{χ=0}
OddDerivation zero_mode(const BrstComplex& cx, const SuperPoly& d);

// {d_χ d} = 0 and d_[0]² = 0 on the generators
Report verify_d_squared(const BrstComplex& cx, const SuperPoly& d);

// S(R_-): generated by J_ā for chain members a of g_{≤0} and φ^ᾱ.
struct MinusComplex {
  BrstComplex cx;
  Scalar c;
  std::vector<Var> blocks;
  BracketTable table;
  OddDerivation d0;

  SuperPoly to_complex(const SuperPoly& x) const;
  // inverse of to_complex on S(R_-); throws SolveError outside it
  SuperPoly from_complex(const SuperPoly& x) const;
  int p2(const Var& v) const;  // twice the filtration degree
  int degree(const Var& v) const { return v.family() == Family::GhostBar ? 1 : 0; }
  Rational weight(const Var& v) const;
  std::function<Rational(const Var&)> weight_fn() const;
  int p2(const Monomial& m) const;
};

MinusComplex restrict_minus(const BrstComplex& cx, const Scalar& c);

struct BrstGenerator {
  int chain = 0;
  SuperPoly value;  // J and φ^ᾱ coordinates
  Rational weight;
  int steps = 0;    // filtration levels corrected
};

// E = J_{r_j} + R, R above the leading filtration degree and free of pure
// kernel monomials, with d_[0] E = 0
BrstGenerator cohomology_generator(const MinusComplex& m, int j);
std::vector<BrstGenerator> cohomology_generators(const MinusComplex& m);

SuperPoly rewrite_in_cohomology(const MinusComplex& m, const std::vector<BrstGenerator>& gens, const SuperPoly& x);
IndetPoly rewrite_in_cohomology(const MinusComplex& m, const std::vector<BrstGenerator>& gens, const IndetPoly& x);
// generator symbols are the GenS variables of the SUSY reduction
BracketTable brst_bracket_table(const MinusComplex& m, const std::vector<BrstGenerator>& gens);

// ā ↦ i^{-p(a)} J_ā on the reduction's chain variables
SuperPoly twist_to_blocks(const BrstComplex& cx, const SuperPoly& w);
// generators and tables of the two constructions after the twist (requires c = i)
Report compare_with_reduction(const MinusComplex& m, const std::vector<BrstGenerator>& e, const BracketTable& te,
                              const std::vector<WGenerator>& w, const BracketTable& tw);

}  // namespace walg
