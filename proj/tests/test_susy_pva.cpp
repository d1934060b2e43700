#include <doctest.h>

#include "oracle.hpp"
#include "walg/algebra_io.hpp"

using namespace walg;

TEST_CASE("ChiD words reduce consistently") {
  ChiDWord chi = ChiDWord::chi(), D = ChiDWord::D();
  // D χ + χ D = -2χ²
  CHECK((D * chi + chi * D) == (chi * chi).scaled(Scalar(-2)));
  // associativity of the normal form
  ChiDWord a = D * chi * D + chi, b = chi * D * D * chi, c = D * chi * chi * D;
  CHECK(((a * b) * c) == (a * (b * c)));
  // the word acts on χ-polynomials as the composition of its letters
  Var x(Family::Susy, 0, 0, 1), y(Family::Susy, 1, 0, 0);
  IndetPoly p = IndetPoly::power(Indet::Chi, 1, SuperPoly::variable(x) * SuperPoly::variable(y));
  CHECK((D * chi).apply(p) == D.apply(chi.apply(p)));
  CHECK((D * D * chi * D).apply(p) == D.apply(D.apply(chi.apply(D.apply(p)))));
  CHECK((D * D).apply(p) == p.map([](const SuperPoly& q) { return q.del(); }));
}

TEST_CASE("osp(1|2) affine chi-brackets") {
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = susy_affine_table(g, Scalar::k());
  int e = g.index_of("e"), f = g.index_of("f"), H = g.index_of("H");
  // [ē_χ f̄] = s(e)(-H̄ + χ k(e|f)) = H̄ + 2kχ
  IndetPoly ef = *t.get(t.generators[e], t.generators[f]);
  CHECK(ef.coeff(0) == susy_var(g, H));
  CHECK(ef.coeff(1) == SuperPoly(Scalar::parse("2k")));
  CHECK(check_susy_skew(t).ok());
  CHECK(check_susy_jacobi(t).ok());
}

TEST_CASE("SUSY affine tables of the catalog satisfy the axioms") {
  for (const char* name : {"sl2", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    BracketTable t = susy_affine_table(g, Scalar::k());
    CHECK(check_susy_skew(t).ok());
    Report r = check_susy_jacobi(t);
    CHECK(r.ok());
    if (!r.ok()) MESSAGE(r.failures.front());
  }
}

TEST_CASE("SUSY master formula agrees with the oracle") {
  std::mt19937 rng(99);
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    BracketTable t = susy_affine_table(g, Scalar::k());
    for (int it = 0; it < 12; ++it) {
      SuperPoly a = oracle::random_poly(rng, t.generators, 3, 3, 2);
      SuperPoly b = oracle::random_poly(rng, t.generators, 3, 3, 2);
      CHECK(susy_master_bracket(a, b, t) == oracle::chi_bracket(a, b, t));
    }
  }
}

TEST_CASE("SUSY Leibniz and sesquilinearity on random polynomials") {
  std::mt19937 rng(4242);
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = susy_affine_table(g, Scalar::k());
  for (int it = 0; it < 10; ++it) {
    SuperPoly a = oracle::random_poly(rng, t.generators, 3, 2, 1);
    SuperPoly b = oracle::random_poly(rng, t.generators, 3, 2, 1);
    SuperPoly c = oracle::random_poly(rng, t.generators, 2, 2, 2);
    // {a_χ bc} = {a_χ b}c + s(b,c){a_χ c}b, b homogeneous
    auto [ce, co] = c.parity_split();
    for (const SuperPoly* C : {&ce, &co}) {
      if (C->is_zero()) continue;
      IndetPoly lhs = susy_master_bracket(a, b * *C, t);
      IndetPoly rhs = susy_master_bracket(a, b, t).right_mul(*C);
      IndetPoly second = susy_master_bracket(a, *C, t).right_mul(b);
      rhs += (b.parity() * C->parity()) % 2 ? -second : second;
      CHECK(lhs == rhs);
    }
    CHECK(susy_master_bracket(a.D(), b, t) == susy_master_bracket(a, b, t).shifted(1));
    IndetPoly s = susy_master_bracket(a, b, t).D_plus_chi();
    CHECK(susy_master_bracket(a, b.D(), t) == (a.parity() ? s : -s));
  }
}

TEST_CASE("SUSY Jacobi on random polynomials") {
  std::mt19937 rng(5);
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = susy_affine_table(g, Scalar::k());
  for (int it = 0; it < 4; ++it) {
    SuperPoly a = oracle::random_poly(rng, t.generators, 2, 1, 1);
    SuperPoly b = oracle::random_poly(rng, t.generators, 2, 1, 1);
    SuperPoly c = oracle::random_poly(rng, t.generators, 2, 1, 2);
    CHECK(susy_jacobi_defect(a, b, c, t).is_zero());
  }
}

TEST_CASE("displayed SUSY master formula on affine tables") {
  // affine brackets are linear in χ, where the literal arrow is exact
  std::mt19937 rng(11);
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = susy_affine_table(g, Scalar::k());
  for (int it = 0; it < 20; ++it) {
    SuperPoly a = oracle::random_poly(rng, t.generators, 2, 2, 1);
    SuperPoly b = oracle::random_poly(rng, t.generators, 2, 2, 1);
    IndetPoly s = susy_master_bracket(a, b, t);
    CHECK(susy_master_bracket(a, b, t, SusyMasterForm::Printed) == s);
    CHECK(susy_master_bracket(a, b, t, SusyMasterForm::Expanded) == s);
  }
}

TEST_CASE("SUSY affine tables reduce to affine PVA tables") {
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    BracketTable t = susy_affine_table(g, Scalar::k());
    ReducedPva r = reduce_to_pva(t);
    CHECK(check_skew(r.table).ok());
    Report j = check_jacobi(r.table, r.names);
    CHECK(j.ok());
    if (!j.ok()) MESSAGE(j.failures.front());
  }
}
