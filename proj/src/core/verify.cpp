#include "walg/verify.hpp"

#include "walg/algebra_io.hpp"
#include "walg/susy_brst.hpp"
#include "walg/susy_pva.hpp"
#include "walg/susy_w.hpp"

namespace walg {

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> s = {
      {"skew", "skew-symmetry of affine and W tables", false},
      {"jacobi", "Jacobi identity of affine and W tables", false},
      {"leibniz", "Leibniz rule and sesquilinearity on random polynomials", false},
      {"weights", "conformal weights of generators and brackets", false},
      {"chain-tensor", "chain tensor identities for ad F / ad E", false},
      {"susy-chain-tensor", "chain tensor identities for ad f / ad e", true},
      {"closed-formulas", "closed generator and bracket formulas vs direct reduction", false},
      {"susy-closed-formulas", "SUSY closed generator and bracket formulas vs direct reduction", true},
      {"d-squared", "{d_χ d} = 0 with symbolic c and d_[0]² = 0", true},
      {"brst-equivalence", "BRST cohomology at c = i vs SUSY reduction", true},
      {"susy-to-pva", "SUSY tables reduce to PVA tables satisfying the axioms", true},
  };
  return s;
}

bool SuiteResult::ok() const {
  for (auto& [n, r] : groups)
    if (!r.ok()) return false;
  return true;
}

static Report fail_report(const std::string& msg) {
  Report r;
  ++r.checked;
  r.fail(msg);
  return r;
}

Report check_leibniz(const BracketTable& t, unsigned seed, int rounds) {
  Report r;
  std::mt19937 rng(seed);
  bool chi = t.kind == Indet::Chi;
  auto br = [&](const SuperPoly& a, const SuperPoly& b) {
    return chi ? susy_master_bracket(a, b, t) : master_bracket(a, b, t);
  };
  for (int it = 0; it < rounds; ++it) {
    SuperPoly a = random_poly(rng, t.generators, 3, 2, 1);
    SuperPoly b = random_poly(rng, t.generators, 3, 2, 1);
    SuperPoly c = random_poly(rng, t.generators, 2, 2, 1);
    r.checked += 3;
    IndetPoly ab = br(a, b);
    IndetPoly lhs = br(a, b * c);
    IndetPoly rhs(t.kind);
    if (chi) {
      // {a_χ bc} = {a_χ b}c + s(b,c){a_χ c}b
      IndetPoly second = br(a, c).right_mul(b);
      rhs = ab.right_mul(c) + ((b.parity() * c.parity()) % 2 ? -second : second);
    } else {
      // {a_λ bc} = {a_λ b}c + s(a,b) b{a_λ c}
      IndetPoly second = br(a, c).left_mul(b);
      rhs = ab.right_mul(c) + ((a.parity() * b.parity()) % 2 ? -second : second);
    }
    if (lhs != rhs) r.fail("Leibniz rule fails for round " + std::to_string(it));
    if (chi) {
      if (br(a.D(), b) != ab.shifted(1)) r.fail("left sesquilinearity fails for round " + std::to_string(it));
      IndetPoly s = ab.D_plus_chi();
      if (br(a, b.D()) != (a.parity() ? s : -s)) r.fail("right sesquilinearity fails for round " + std::to_string(it));
    } else {
      if (br(a.del(), b) != -ab.shifted(1)) r.fail("left sesquilinearity fails for round " + std::to_string(it));
      if (br(a, b.del()) != ab.lambda_plus_del()) r.fail("right sesquilinearity fails for round " + std::to_string(it));
    }
  }
  return r;
}

namespace {

struct Tables {
  std::string name;
  BracketTable t;
  Namer names;
  std::function<Rational(const Var&)> weight;
};

std::vector<Tables> all_tables(const LieSuperalgebra& g) {
  std::vector<Tables> out;
  out.push_back({"affine", affine_table(g, Scalar::k()), default_name, nullptr});
  ReductionContext ctx = make_context(g);
  auto gens = solve_generators(ctx);
  out.push_back({"W", w_table(ctx, gens, false), ctx.gen_names(), ctx.weight_fn()});
  if (g.osp) {
    out.push_back({"SUSY affine", susy_affine_table(g, Scalar::k()), default_name, nullptr});
    ReductionContext sctx = make_susy_context(g);
    auto sg = solve_generators(sctx);
    out.push_back({"SUSY W", w_table(sctx, sg, false), sctx.gen_names(), sctx.weight_fn()});
  }
  // the contexts die here; weight functions are rebuilt where needed
  for (auto& x : out) x.weight = nullptr;
  return out;
}

void closed_formulas(SuiteResult& res, const LieSuperalgebra& g, bool susy) {
  ReductionContext ctx = susy ? make_susy_context(g) : make_context(g);
  auto gens = solve_generators(ctx);
  std::string tag = susy ? "SUSY " : "";
  Report lin, mem, count, brk;
  ++count.checked;
  int dimk = 0;
  {
    Element x = susy ? g.osp->f : g.sl2->F;
    Matrix m(g.dim(), std::vector<Scalar>(g.dim()));
    for (int b = 0; b < g.dim(); ++b) {
      Element y = g.bracket(x, g.basis(b));
      for (int a = 0; a < g.dim(); ++a) m[a][b] = y[a];
    }
    dimk = g.dim() - rank(m, g.dim());
  }
  if (static_cast<int>(gens.size()) != dimk)
    count.fail(std::to_string(gens.size()) + " generators, kernel dimension " + std::to_string(dimk));
  for (auto& w : gens) {
    ++lin.checked;
    if (!w.linear_matches) lin.fail("generator " + ctx.gen_names()(ctx.gen(w.chain)) + ": linear part differs");
    mem.merge(check_membership(ctx, w));
  }
  for (int i = 0; i < ctx.b.nchains(); ++i)
    for (int j = 0; j < ctx.b.nchains(); ++j) {
      ++brk.checked;
      IndetPoly d = w_bracket_direct(ctx, gens, i, j);
      IndetPoly c = susy ? susy_w_bracket_closed(ctx, i, j) : w_bracket_closed(ctx, i, j);
      if (d != c)
        brk.fail("(" + std::to_string(i) + "," + std::to_string(j) + "): direct " + d.str(ctx.gen_names()) +
                 ", closed " + c.str(ctx.gen_names()));
    }
  res.groups.push_back({tag + "generator count = dim kernel", count});
  res.groups.push_back({tag + "invariance of generators", mem});
  res.groups.push_back({tag + "closed generator formula = solver linear part", lin});
  res.groups.push_back({tag + "closed bracket formula = direct reduction", brk});
}

}  // namespace

SuiteResult run_suite(const LieSuperalgebra& g, const std::string& suite, unsigned seed) {
  const SuiteInfo* info = nullptr;
  for (auto& s : suites())
    if (s.name == suite) info = &s;
  if (!info) throw InputError("unknown suite '" + suite + "'");
  if (info->needs_osp && !g.osp) throw InputError("suite '" + suite + "' needs osp(1|2) data");
  SuiteResult res;
  res.suite = suite;

  if (suite == "skew" || suite == "jacobi") {
    for (auto& t : all_tables(g)) {
      Report r;
      if (suite == "skew")
        r = t.t.kind == Indet::Chi ? check_susy_skew(t.t, t.names) : check_skew(t.t, t.names);
      else
        r = t.t.kind == Indet::Chi ? check_susy_jacobi(t.t, t.names) : check_jacobi(t.t, t.names);
      res.groups.push_back({t.name + " table " + suite, r});
    }
  } else if (suite == "leibniz") {
    res.groups.push_back({"affine Leibniz/sesquilinearity", check_leibniz(affine_table(g, Scalar::k()), seed)});
    if (g.osp)
      res.groups.push_back(
          {"SUSY affine Leibniz/sesquilinearity", check_leibniz(susy_affine_table(g, Scalar::k()), seed)});
  } else if (suite == "weights") {
    for (bool susy : {false, true}) {
      if (susy && !g.osp) continue;
      ReductionContext ctx = susy ? make_susy_context(g) : make_context(g);
      auto gens = solve_generators(ctx);
      Report hom;
      for (auto& w : gens) {
        ++hom.checked;
        auto wt = w.value.weight(ctx.weight_fn());
        Rational want = (susy ? Rational(1, 2) : Rational(1)) - half_units(ctx.b.grade2(w.chain, 0));
        if (!wt || *wt != want || w.weight != want)
          hom.fail("generator " + ctx.gen_names()(ctx.gen(w.chain)) + " is not homogeneous of weight " + want.get_str());
      }
      std::string tag = susy ? "SUSY " : "";
      res.groups.push_back({tag + "generators homogeneous", hom});
      res.groups.push_back(
          {tag + "W brackets homogeneous", check_bracket_weights(w_table(ctx, gens, false), ctx.weight_fn(), ctx.gen_names())});
    }
  } else if (suite == "chain-tensor" || suite == "susy-chain-tensor") {
    DualBases b = build_dual_bases(g, suite == "chain-tensor" ? DualBases::Even : DualBases::Odd);
    Report r;
    for (auto& f : check_tensor_identity(g, b)) r.fail(f);
    r.checked += b.nchains();
    res.groups.push_back({"tensor identities for every t", r});
  } else if (suite == "closed-formulas") {
    closed_formulas(res, g, false);
  } else if (suite == "susy-closed-formulas") {
    closed_formulas(res, g, true);
  } else if (suite == "d-squared") {
    BrstComplex cx = build_complex(g);
    SuperPoly d = build_d(cx, Scalar::c());
    Report all = verify_d_squared(cx, d);
    Report dd, d0;
    dd.checked = 1;
    d0.checked = all.checked - 1;
    for (auto& f : all.failures) (f.rfind("{d_χ d}", 0) == 0 ? dd : d0).fail(f);
    res.groups.push_back({"{d_χ d}=0 (symbolic c)", dd});
    res.groups.push_back({"d_[0]²=0 on all generators", d0});
  } else if (suite == "brst-equivalence") {
    try {
      MinusComplex m = restrict_minus(build_complex(g), Scalar::i());
      auto e = cohomology_generators(m);
      BracketTable te = brst_bracket_table(m, e);
      ReductionContext ctx = make_susy_context(g);
      auto w = solve_generators(ctx);
      BracketTable tw = w_table(ctx, w, false);
      res.groups.push_back({"BRST (c = i) generators and table = twisted reduction",
                            compare_with_reduction(m, e, te, w, tw)});
      res.groups.push_back({"BRST table skew-symmetry", check_susy_skew(te, m.cx.names())});
      res.groups.push_back({"BRST table Jacobi", check_susy_jacobi(te, m.cx.names())});
    } catch (const SolveError& ex) {
      res.groups.push_back({"BRST cohomology", fail_report(ex.what())});
    }
  } else if (suite == "susy-to-pva") {
    ReductionContext ctx = make_susy_context(g);
    auto gens = solve_generators(ctx);
    std::vector<std::pair<std::string, ReducedPva>> tables;
    tables.push_back({"SUSY affine", reduce_to_pva(susy_affine_table(g, Scalar::k()))});
    tables.push_back({"SUSY W", reduce_to_pva(w_table(ctx, gens, false), ctx.gen_names())});
    for (auto& [n, p] : tables) {
      res.groups.push_back({n + " reduced skew", check_skew(p.table, p.names)});
      res.groups.push_back({n + " reduced Jacobi", check_jacobi(p.table, p.names)});
    }
  }
  return res;
}

}  // namespace walg
