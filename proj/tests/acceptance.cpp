// One PASS/FAIL line per acceptance criterion, with wall time against its limit.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "walg/algebra_io.hpp"
#include "walg/classical_w.hpp"
#include "walg/verify.hpp"
#include "walg/walg.h"

using namespace walg;

namespace {

using Failures = std::vector<std::string>;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing golden file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void suite(Failures& out, const std::string& alg, const std::string& name, unsigned seed = 2024) {
  SuiteResult r = run_suite(load_algebra(alg), name, seed);
  for (auto& [g, rep] : r.groups) {
    if (rep.checked == 0) out.push_back(alg + " " + name + ": " + g + ": nothing checked");
    for (auto& f : rep.failures) out.push_back(alg + " " + name + ": " + g + ": " + f);
  }
}

std::string capi(const std::function<int(char**)>& call, Failures& out, const std::string& what) {
  char* s = nullptr;
  int st = call(&s);
  if (st != WALG_OK) {
    out.push_back(what + ": status " + std::to_string(st) + " " + walg_last_error());
    return {};
  }
  std::string r = s;
  walg_string_free(s);
  return r;
}

Failures virasoro() {
  Failures out;
  std::string gen_golden = slurp(std::string(GOLDEN_DIR) + "/sl2_generators.txt");
  std::string br_golden = slurp(std::string(GOLDEN_DIR) + "/sl2_bracket_0_0.txt");

  walg_algebra* a = nullptr;
  walg_w* w = nullptr;
  if (walg_algebra_load("sl2", &a) != WALG_OK || walg_w_build(a, 0, &w) != WALG_OK) {
    out.push_back(std::string("build: ") + walg_last_error());
    walg_algebra_free(a);
    return out;
  }
  walg_options o;
  walg_options_init(&o);
  std::string gens = capi([&](char** s) { return walg_w_generators(w, &o, s); }, out, "generators");
  if (gens != gen_golden) out.push_back("generators: got '" + gens + "'");
  for (walg_method m : {WALG_CLOSED, WALG_DIRECT}) {
    o.method = m;
    std::string b = capi([&](char** s) { return walg_w_bracket(w, 0, 0, &o, s); }, out, "bracket");
    if (b != br_golden) out.push_back(std::string(m == WALG_CLOSED ? "closed" : "direct") + " bracket: got '" + b + "'");
  }
  walg_w_free(w);
  walg_algebra_free(a);

  // the golden values against the axiom oracle, starting from the hand-written density
  ReductionContext ctx = make_context(load_algebra("sl2"));
  const LieSuperalgebra& g = ctx.g;
  auto uv = [&](const char* l, int ord) {
    int i = g.index_of(l);
    return SuperPoly::variable(Var(Family::Affine, i, ord, g.parity[i]));
  };
  SuperPoly want = uv("F", 0) + uv("H", 1).scaled(Scalar::parse("1/2 k")) + (uv("H", 0) * uv("H", 0)).scaled(Scalar(Rational(1, 4)));
  if (want.str(ctx.user_names()) + "\n" != gen_golden.substr(gen_golden.find("= ") + 2))
    out.push_back("golden generator text differs from the hand-written density");
  auto gensv = solve_generators(ctx);
  if (ctx.to_user(gensv[0].value) != want) out.push_back("solver density differs from the hand-written one");
  for (auto& [j, n] : ctx.flat) {
    if (ctx.b.grade2(j, n) <= 0) continue;
    if (!ctx.rho(oracle::lam_bracket(ctx.var_poly(j, n), gensv[0].value, ctx.affine)).is_zero())
      out.push_back("oracle: density not invariant");
  }
  IndetPoly ob = rewrite_in_generators(ctx, gensv, ctx.rho(oracle::lam_bracket(gensv[0].value, gensv[0].value, ctx.affine)));
  std::string ot = "{w_F λ w_F} = " + ob.str(ctx.gen_names()) + "\n";
  if (ot != br_golden) out.push_back("oracle self-bracket: " + ot);
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double limit;  // seconds, 0 = none
  std::function<Failures()> run;
};

}  // namespace

int main() {
  const std::vector<std::string> all = {"sl2", "sl3-principal", "sl3-minimal", "osp12", "sl21"};
  const std::vector<std::string> even = {"sl2", "sl3-principal", "sl3-minimal"};
  const std::vector<std::string> osp = {"osp12", "sl21"};

  std::vector<Criterion> cs = {
      {1, "Virasoro density and self-bracket on sl2 (golden + oracle)", 1.0, virasoro},
      {2, "linear parts and closed = direct brackets on sl2, sl3-principal, sl3-minimal", 60.0,
       [&] {
         Failures f;
         for (auto& a : even) suite(f, a, "closed-formulas");
         return f;
       }},
      {3, "chain tensor identities on every catalog algebra", 5.0,
       [&] {
         Failures f;
         for (auto& a : all) suite(f, a, "chain-tensor");
         for (auto& a : osp) suite(f, a, "susy-chain-tensor");
         return f;
       }},
      {4, "{d_χ d} = 0 (symbolic c) and d_[0]² = 0 on osp12, sl21", 10.0,
       [&] {
         Failures f;
         for (auto& a : osp) suite(f, a, "d-squared");
         return f;
       }},
      {5, "SUSY W: count, invariance, linear parts, closed = direct on osp12, sl21", 120.0,
       [&] {
         Failures f;
         for (auto& a : osp) suite(f, a, "susy-closed-formulas");
         return f;
       }},
      {6, "BRST (c = i) and SUSY reduction agree on osp12, sl21", 120.0,
       [&] {
         Failures f;
         for (auto& a : osp) suite(f, a, "brst-equivalence");
         return f;
       }},
      {7, "skew-symmetry, Jacobi, reduced SUSY tables, randomized Leibniz", 60.0,
       [&] {
         Failures f;
         for (auto& a : all)
           for (const char* s : {"skew", "jacobi", "leibniz"}) suite(f, a, s);
         for (auto& a : osp) suite(f, a, "susy-to-pva");
         return f;
       }},
      {8, "conformal weights of every generator and bracket", 0.0,
       [&] {
         Failures f;
         for (auto& a : all) suite(f, a, "weights");
         return f;
       }},
  };

  int failed = 0;
  for (auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && dt >= c.limit) f.push_back("time limit exceeded");
    bool ok = f.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(3) << dt << " s";
    if (c.limit > 0) std::cout << ", limit " << std::setprecision(0) << c.limit << " s";
    std::cout << ")\n";
    for (auto& x : f) std::cout << "    " << x << "\n";
  }
  return failed ? 1 : 0;
}
