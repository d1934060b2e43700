#include <doctest.h>

#include "oracle.hpp"
#include "walg/algebra_io.hpp"

using namespace walg;

static Namer user_names(const LieSuperalgebra& g) {
  return [&g](const Var& v) { return g.labels[v.index()]; };
}

TEST_CASE("superpoly signs and derivations") {
  Var x(Family::Affine, 0, 0, 1), y(Family::Affine, 1, 0, 1), z(Family::Affine, 2, 0, 0);
  SuperPoly X = SuperPoly::variable(x), Y = SuperPoly::variable(y), Z = SuperPoly::variable(z);
  CHECK((X * Y) == -(Y * X));
  CHECK((X * X).is_zero());
  CHECK((X * Y).partial(y) == -X);
  CHECK((Z * Z * X).partial(z) == (Z * X).scaled(Scalar(2)));
  // ∂ is an even derivation
  CHECK((X * Y).del() == X.del() * Y + X * Y.del());
  // D is odd: D(ab) = D(a) b + s(a) a D(b)
  Var a(Family::Susy, 0, 0, 1), b(Family::Susy, 1, 0, 0);
  SuperPoly A = SuperPoly::variable(a), B = SuperPoly::variable(b);
  CHECK((A * B).D() == A.D() * B - A * B.D());
  CHECK((A * B).D().D() == (A * B).del());
  SuperPoly p = (A * B.D() + B * B).scaled(Scalar::parse("1/2 k"));
  CHECK(SuperPoly::from_json(p.to_json()) == p);
  IndetPoly ip = IndetPoly::power(Indet::Chi, 3, p) + IndetPoly::constant(Indet::Chi, A);
  CHECK(IndetPoly::from_json(ip.to_json()) == ip);
}

TEST_CASE("chi-operator module rule is consistent") {
  // (D+χ)² acts as ∂ - χ² on every χ-power
  Var a(Family::Susy, 0, 0, 1), b(Family::Susy, 1, 0, 0);
  SuperPoly A = SuperPoly::variable(a), B = SuperPoly::variable(b);
  for (int n = 0; n < 4; ++n) {
    IndetPoly x = IndetPoly::power(Indet::Chi, n, A * B.D());
    IndetPoly lhs = x.D_plus_chi().D_plus_chi();
    IndetPoly rhs = IndetPoly::power(Indet::Chi, n, (A * B.D()).del()) - x.shifted(2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("affine tables satisfy the PVA axioms") {
  for (const char* name : {"sl2", "sl3-principal", "osp12", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    BracketTable t = affine_table(g, Scalar::k());
    CHECK(check_skew(t).ok());
    Report j = check_jacobi(t, user_names(g));
    CHECK(j.ok());
  }
}

TEST_CASE("master formula agrees with the axiom oracle on generators") {
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = affine_table(g, Scalar::k());
  for (auto& a : t.generators)
    for (auto& b : t.generators) {
      SuperPoly A = SuperPoly::variable(a.with_order(1)), B = SuperPoly::variable(b.with_order(2));
      CHECK(master_bracket(A, B, t) == oracle::lam_bracket(A, B, t));
    }
}

TEST_CASE("printed master-formula sign fails on odd generators") {
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = affine_table(g, Scalar::k());
  int e = g.index_of("e"), H = g.index_of("H");
  SuperPoly a = SuperPoly::variable(t.generators[e]), b = SuperPoly::variable(t.generators[H]);
  CHECK(master_bracket(a, b, t, MasterSign::Printed) != *t.get(t.generators[e], t.generators[H]));
  CHECK(master_bracket(a, b, t, MasterSign::Corrected) == *t.get(t.generators[e], t.generators[H]));
}

TEST_CASE("randomized master formula vs oracle, Leibniz and sesquilinearity") {
  std::mt19937 rng(20240521);
  for (const char* name : {"sl2", "osp12", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    BracketTable t = affine_table(g, Scalar::k());
    for (int it = 0; it < 12; ++it) {
      SuperPoly a = oracle::random_poly(rng, t.generators, 3, 2, 2);
      SuperPoly b = oracle::random_poly(rng, t.generators, 3, 2, 2);
      SuperPoly c = oracle::random_poly(rng, t.generators, 2, 2, 2);
      CHECK(master_bracket(a, b, t) == oracle::lam_bracket(a, b, t));
      auto [ae, ao] = a.parity_split();
      auto [be, bo] = b.parity_split();
      for (const SuperPoly* A : {&ae, &ao})
        for (const SuperPoly* B : {&be, &bo}) {
          if (A->is_zero() || B->is_zero()) continue;
          IndetPoly lhs = master_bracket(*A, *B * c, t);
          IndetPoly rhs = master_bracket(*A, *B, t).right_mul(c);
          IndetPoly second = master_bracket(*A, c, t).left_mul(*B);
          rhs += (A->parity() * B->parity()) % 2 ? -second : second;
          CHECK(lhs == rhs);
          CHECK(master_bracket(*A, B->del(), t) == master_bracket(*A, *B, t).lambda_plus_del());
          CHECK(master_bracket(A->del(), *B, t) == -master_bracket(*A, *B, t).shifted(1));
        }
    }
  }
}

TEST_CASE("Jacobi on random polynomials in the affine PVA") {
  std::mt19937 rng(7);
  LieSuperalgebra g = load_algebra("osp12");
  BracketTable t = affine_table(g, Scalar::k());
  for (int it = 0; it < 4; ++it) {
    SuperPoly a = oracle::random_poly(rng, t.generators, 2, 1, 1);
    SuperPoly b = oracle::random_poly(rng, t.generators, 2, 1, 1);
    SuperPoly c = oracle::random_poly(rng, t.generators, 2, 1, 2);
    CHECK(jacobi_defect(a, b, c, t).is_zero());
  }
}
