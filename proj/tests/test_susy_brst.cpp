#include <doctest.h>

#include "oracle.hpp"
#include "walg/algebra_io.hpp"
#include "walg/susy_brst.hpp"
#include "walg/susy_w.hpp"

using namespace walg;

static int sg(int p) { return (p & 1) ? -1 : 1; }

static SuperPoly V(const Var& v) { return SuperPoly::variable(v); }

TEST_CASE("BRST complex shape and axioms") {
  BrstComplex cx = build_complex(load_algebra("osp12"));
  const LieSuperalgebra& g = cx.g;
  CHECK(cx.table.generators.size() == 9);
  CHECK(cx.nghosts() == 2);
  int e = -1;
  for (int al = 0; al < cx.nghosts(); ++al)
    if (g.labels[cx.u[al]] == "e") e = al;
  REQUIRE(e >= 0);
  CHECK(oracle::chi_bracket(V(cx.phibar(e)), V(cx.phi(e)), cx.table) ==
        IndetPoly::constant(Indet::Chi, SuperPoly(Scalar(1))));
  CHECK(oracle::chi_bracket(V(cx.j(0)), V(cx.phi(e)), cx.table).is_zero());
  for (int al = 0; al < cx.nghosts(); ++al)
    for (int be = 0; be < cx.nghosts(); ++be)
      CHECK(g.pair(cx.udual[al], g.basis(cx.u[be])) == Scalar(al == be ? 1 : 0));
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    BrstComplex c2 = build_complex(load_algebra(name));
    Report sk = check_susy_skew(c2.table, c2.names());
    CHECK(sk.ok());
    Report jac = check_susy_jacobi(c2.table, c2.names());
    CHECK(jac.ok());
    for (auto& f : jac.failures) MESSAGE(f);
  }
}

TEST_CASE("BRST differential squares to zero with symbolic c") {
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    BrstComplex cx = build_complex(load_algebra(name));
    SuperPoly d = build_d(cx, Scalar::c());
    CHECK(d.parity() == 0);
    Report r = verify_d_squared(cx, d);
    CHECK(r.ok());
    for (auto& f : r.failures) MESSAGE(f);
    CHECK(oracle::chi_bracket(d, d, cx.table).is_zero());
  }
}

TEST_CASE("zero mode of d is an odd derivation") {
  std::mt19937 rng(515);
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    BrstComplex cx = build_complex(load_algebra(name));
    SuperPoly d = build_d(cx, Scalar::c());
    OddDerivation d0 = zero_mode(cx, d);
    for (int it = 0; it < 10; ++it) {
      SuperPoly a = oracle::random_poly(rng, cx.table.generators, 3, 2, 2);
      SuperPoly b = oracle::random_poly(rng, cx.table.generators, 2, 1, 1);
      CHECK(d0(a) == oracle::chi_bracket(d, a, cx.table).coeff(0));
      auto [ae, ao] = a.parity_split();
      for (auto& [x, p] : {std::pair{ae, 0}, std::pair{ao, 1}})
        CHECK(d0(x * b) == d0(x) * b + (x * d0(b)).scaled(Scalar(sg(p))));
      CHECK(d0(a.D()) == -d0(a).D());
    }
  }
}

TEST_CASE("χ-brackets of d with the generators") {
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    BrstComplex cx = build_complex(load_algebra(name));
    const LieSuperalgebra& g = cx.g;
    Scalar c = Scalar::c(), k = Scalar::k();
    SuperPoly d = build_d(cx, c);
    int n = cx.nghosts();
    auto ps = [&](int al) { return g.parity[cx.u[al]]; };
    for (int a = 0; a < g.dim(); ++a) {
      IndetPoly want(Indet::Chi);
      int pa = g.parity[a];
      for (int al = 0; al < n; ++al) {
        Element ua = g.basis(cx.u[al]);
        want.add(0, (V(cx.phibar(al)) * cx.j_of(g.bracket(ua, g.basis(a)))).scaled(Scalar(sg(ps(al) * pa + ps(al)))));
        Scalar kk = k * g.pair(ua, g.basis(a)) * Scalar(-sg(ps(al)));
        want.add(0, V(cx.phibar(al)).D().scaled(kk));
        want.add(1, V(cx.phibar(al)).scaled(kk));
      }
      CHECK(susy_master_bracket(d, V(cx.j(a)), cx.table) == want);
    }
    for (int al = 0; al < n; ++al) {
      SuperPoly want;
      for (int be = 0; be < n; ++be)
        want += (V(cx.phibar(be)) * cx.phibar_of(g.bracket(g.basis(cx.u[be]), cx.udual[al])))
                    .scaled(Scalar(Rational(sg(ps(al) * ps(be) + ps(be)), 2)));
      CHECK(susy_master_bracket(d, V(cx.phibar(al)), cx.table) == IndetPoly::constant(Indet::Chi, want));
    }
    for (int al = 0; al < n; ++al) {
      Element ua = g.basis(cx.u[al]);
      SuperPoly want = V(cx.j(cx.u[al])).scaled(Scalar(-sg(ps(al)))) - SuperPoly(c * g.pair(g.osp->f, ua));
      for (int be = 0; be < n; ++be)
        want += (V(cx.phibar(be)) * cx.phi_of(g.bracket(g.basis(cx.u[be]), ua)))
                    .scaled(Scalar(sg(ps(al) * ps(be) + ps(be))));
      CHECK(susy_master_bracket(d, V(cx.phi(al)), cx.table) == IndetPoly::constant(Indet::Chi, want));
    }
  }
}

TEST_CASE("building blocks") {
  {
    BrstComplex cx = build_complex(load_algebra("osp12"));
    int F = cx.g.index_of("F");
    CHECK(cx.building_block(cx.g.basis(F)) == V(cx.j(F)));
  }
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    BrstComplex cx = build_complex(load_algebra(name));
    const LieSuperalgebra& g = cx.g;
    Scalar c = Scalar::c(), k = Scalar::k();
    SuperPoly d = build_d(cx, c);
    OddDerivation d0 = zero_mode(cx, d);
    int n = cx.nghosts();
    auto le0 = [&](const Element& x) {
      Element y = zero_element(g.dim());
      for (int a = 0; a < g.dim(); ++a)
        if (g.grade2[a] <= 0) y[a] = x[a];
      return y;
    };
    for (int a = 0; a < g.dim(); ++a) {
      CAPTURE(g.labels[a]);
      Element ea = g.basis(a);
      int pa = g.parity[a];
      SuperPoly J = cx.building_block(ea);
      // d_[0] J_ā = Σ s(a,β)s(β) φ^β̄ (J_{π≤0[u_β,a]} + c(f|[u_β,a])) - Σ s(β) k Dφ^β̄ (u_β|a)
      SuperPoly want;
      for (int be = 0; be < n; ++be) {
        int pb = g.parity[cx.u[be]];
        Element br = g.bracket(g.basis(cx.u[be]), ea);
        SuperPoly inner = cx.building_block(le0(br)) + SuperPoly(c * g.pair(g.osp->f, br));
        want += (V(cx.phibar(be)) * inner).scaled(Scalar(sg(pa * pb + pb)));
        want -= V(cx.phibar(be)).D().scaled(k * g.pair(g.basis(cx.u[be]), ea) * Scalar(sg(pb)));
      }
      CHECK(d0(J) == want);
    }
    // {J_ā χ J_b̄} = s(a,b)s(a) J_{[a,b]} + kχ(a|b) when a, b are both in g_{≤0} or both in g_{>0}
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        if ((g.grade2[a] > 0) != (g.grade2[b] > 0)) continue;
        Element ea = g.basis(a), eb = g.basis(b);
        IndetPoly want(Indet::Chi);
        want.add(0, cx.building_block(g.bracket(ea, eb)).scaled(Scalar(sg(g.parity[a] * g.parity[b] + g.parity[a]))));
        want.add(1, SuperPoly(k * g.pair(ea, eb)));
        CHECK(susy_master_bracket(cx.building_block(ea), cx.building_block(eb), cx.table) == want);
      }
  }
}

TEST_CASE("S(R_-) bigrading and weights") {
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    MinusComplex m = restrict_minus(build_complex(load_algebra(name)), Scalar::c());
    Report sk = check_susy_skew(m.table, m.cx.names());
    CHECK(sk.ok());
    CHECK(check_susy_jacobi(m.table, m.cx.names()).ok());
    for (auto& v : m.table.generators) {
      CAPTURE(m.cx.names()(v));
      SuperPoly img = m.d0(V(v));
      for (auto& [mono, c] : img.terms()) {
        int deg = 0;
        for (auto& x : mono) deg += m.degree(x);
        CHECK(deg == m.degree(v) + 1);
        CHECK(m.p2(mono) >= m.p2(v));
      }
      auto w = img.weight(m.weight_fn());
      REQUIRE(w);
      if (!img.is_zero()) CHECK(*w == m.weight(v));
      CHECK(m.d0(img).is_zero());
    }
  }
}

TEST_CASE("BRST cohomology generators and table") {
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    BrstComplex cx = build_complex(g);
    MinusComplex m = restrict_minus(cx, Scalar::i());
    auto gens = cohomology_generators(m);
    CHECK(static_cast<int>(gens.size()) == oracle::dim_kernel_ad(g, g.osp->f));
    OddDerivation full = zero_mode(cx, build_d(cx, Scalar::i()));
    for (auto& e : gens) {
      CHECK(m.d0(e.value).is_zero());
      CHECK(full(m.to_complex(e.value)).is_zero());
      auto [j, n] = cx.chains.flat[cx.chains.flat_of.at({e.chain, 0})];
      Var lead = cx.block(cx.chains.flat_of.at({j, n}));
      CHECK(e.weight == Rational(1, 2) - half_units(cx.chains.b.grade2(j, 0)));
      auto w = e.value.weight(m.weight_fn());
      REQUIRE(w);
      CHECK(*w == e.weight);
      SuperPoly rest = e.value - V(lead);
      for (auto& [mono, c] : rest.terms()) CHECK(m.p2(mono) > m.p2(lead));
      MESSAGE(std::string(name) << ": " << cx.names()(cx.chains.gen(e.chain)) << " = " << e.value.str(cx.names()));
    }
    if (std::string(name) == "osp12") {
      REQUIRE(gens.size() == 1);
      CHECK(gens[0].weight == Rational(3, 2));
    }
    BracketTable t = brst_bracket_table(m, gens);
    CHECK(check_susy_skew(t).ok());
    CHECK(check_susy_jacobi(t).ok());
    // brackets with exact elements stay exact: {E_χ d_[0]A} = -s(E) d_[0]{E_χ A}
    for (auto& e : gens)
      for (int al = 0; al < cx.nghosts(); ++al) {
        SuperPoly E = m.to_complex(e.value);
        SuperPoly A = V(cx.phi(al));
        IndetPoly lhs = susy_master_bracket(E, full(A), cx.table);
        IndetPoly inner = susy_master_bracket(E, A, cx.table);
        IndetPoly rhs(Indet::Chi);
        for (auto& [l, p] : inner.coeffs()) rhs.add(l, full(p).scaled(Scalar(-sg(E.parity() + l))));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("BRST at c = i agrees with the SUSY reduction") {
  for (const char* name : {"osp12", "sl21"}) {
    CAPTURE(name);
    LieSuperalgebra g = load_algebra(name);
    MinusComplex m = restrict_minus(build_complex(g), Scalar::i());
    auto e = cohomology_generators(m);
    BracketTable te = brst_bracket_table(m, e);
    const ReductionContext& ctx = m.cx.chains;
    auto w = solve_generators(ctx);
    BracketTable tw = w_table(ctx, w, false);
    Report r = compare_with_reduction(m, e, te, w, tw);
    CHECK(r.ok());
    for (auto& f : r.failures) MESSAGE(f);
  }
}
