#include "walg/classical_w.hpp"

#include <future>
#include <tuple>

#include "walg/susy_pva.hpp"
#include "walg/susy_w.hpp"

namespace walg {

int ReductionContext::grade2(const Var& v) const {
  auto [j, n] = flat[v.index()];
  return b.grade2(j, n);
}

Var ReductionContext::var(int j, int n) const {
  if (susy) return Var(Family::Susy, flat_of.at({j, n}), 0, b.parity_low(j, n) ^ 1);
  return Var(Family::Affine, flat_of.at({j, n}), 0, b.parity_low(j, n));
}

Var ReductionContext::gen(int j) const {
  return susy ? Var(Family::GenS, j, 0, b.parity[j] ^ 1) : Var(Family::Gen, j, 0, b.parity[j]);
}

static bool chain_family(const Var& v) { return v.family() == Family::Affine || v.family() == Family::Susy; }

bool ReductionContext::is_correction(const Var& v) const {
  if (!chain_family(v)) return false;
  auto [j, n] = flat[v.index()];
  return is_correction(j, n);
}

Rational ReductionContext::weight(const Var& v) const {
  Rational base = susy ? Rational(1, 2) : Rational(1);
  if (v.family() == Family::Gen || v.family() == Family::GenS) return base + half_units(b.spin2[v.index()]);
  return base - half_units(grade2(v));
}

std::function<Rational(const Var&)> ReductionContext::weight_fn() const {
  return [this](const Var& v) { return weight(v); };
}

SuperPoly ReductionContext::element_poly(const Element& x) const {
  SuperPoly p;
  for (size_t t = 0; t < flat.size(); ++t) {
    auto [j, n] = flat[t];
    Scalar c = b.coord(g, x, j, n);
    if (!c.is_zero()) p += var_poly(j, n).scaled(c);
  }
  return p;
}

SuperPoly ReductionContext::gen_of(const Element& x) const {
  SuperPoly p;
  for (int j = 0; j < b.nchains(); ++j) {
    Scalar c = b.coord(g, x, j, 0);
    if (!c.is_zero()) p += SuperPoly::variable(gen(j)).scaled(c);
  }
  return p;
}

SuperPoly ReductionContext::rho(const SuperPoly& p) const {
  return p.substitute([this](const Var& v) -> std::optional<SuperPoly> {
    if (!chain_family(v)) return std::nullopt;
    auto [j, n] = flat[v.index()];
    if (in_p(j, n)) return std::nullopt;
    return SuperPoly(g.pair(F, b.low[j][n]));
  });
}

IndetPoly ReductionContext::rho(const IndetPoly& p) const {
  return p.map([this](const SuperPoly& x) { return rho(x); });
}

SuperPoly ReductionContext::pi(const SuperPoly& p) const {
  SuperPoly out;
  for (auto& [m, c] : p.terms()) {
    bool keep = true;
    for (auto& v : m)
      if (is_correction(v)) keep = false;
    if (keep) out.add_term(m, c);
  }
  return out;
}

SuperPoly ReductionContext::to_user(const SuperPoly& p) const {
  return p.substitute([this](const Var& v) -> std::optional<SuperPoly> {
    if (!chain_family(v)) return std::nullopt;
    auto [j, n] = flat[v.index()];
    return susy ? susy_element(b.low[j][n], g) : affine_element(b.low[j][n], g);
  });
}

IndetPoly ReductionContext::to_user(const IndetPoly& p) const {
  return p.map([this](const SuperPoly& x) { return to_user(x); });
}

Namer ReductionContext::user_names() const {
  return [this](const Var& v) -> std::string {
    if (v.family() == Family::Gen || v.family() == Family::GenS) return gen_names()(v);
    return g.labels[v.index()];
  };
}

Namer ReductionContext::gen_names() const {
  return [this](const Var& v) -> std::string {
    if (v.family() != Family::Gen && v.family() != Family::GenS) return default_name(v);
    // name after the basis vector when q_j is a multiple of one
    const Element& q = b.low[v.index()][0];
    int hit = -1, count = 0;
    for (int a = 0; a < g.dim(); ++a)
      if (!q[a].is_zero()) hit = a, ++count;
    if (count == 1 && q[hit].is_one()) return "w_" + g.labels[hit];
    return "w" + std::to_string(v.index());
  };
}

IndetPoly ReductionContext::bracket(const SuperPoly& x, const SuperPoly& y) const {
  return susy ? susy_master_bracket(x, y, affine) : master_bracket(x, y, affine);
}

ReductionContext make_context(const LieSuperalgebra& g) {
  if (!g.sl2) throw std::invalid_argument("algebra has no sl2 triple");
  ReductionContext ctx;
  ctx.g = g;
  ctx.F = g.sl2->F;
  ctx.b = build_dual_bases(g, DualBases::Even);
  std::vector<Element> basis;
  std::vector<std::string> labels;
  for (int j = 0; j < ctx.b.nchains(); ++j)
    for (int n = 0; n < ctx.b.length(j); ++n) {
      ctx.flat_of[{j, n}] = static_cast<int>(ctx.flat.size());
      ctx.flat.push_back({j, n});
      basis.push_back(ctx.b.low[j][n]);
      labels.push_back("q" + std::to_string(j) + "_" + std::to_string(n));
    }
  ctx.cg = change_basis(g, basis, labels);
  ctx.affine = affine_table(ctx.cg, Scalar::k());
  return ctx;
}

ReductionContext make_susy_context(const LieSuperalgebra& g) {
  if (!g.osp) throw std::invalid_argument("algebra has no osp(1|2) data");
  ReductionContext ctx;
  ctx.susy = true;
  ctx.g = g;
  ctx.F = g.osp->f;
  ctx.b = build_dual_bases(g, DualBases::Odd);
  std::vector<Element> basis;
  std::vector<std::string> labels;
  for (int j = 0; j < ctx.b.nchains(); ++j)
    for (int n = 0; n < ctx.b.length(j); ++n) {
      ctx.flat_of[{j, n}] = static_cast<int>(ctx.flat.size());
      ctx.flat.push_back({j, n});
      basis.push_back(ctx.b.low[j][n]);
      labels.push_back("r" + std::to_string(j) + "_" + std::to_string(n));
    }
  ctx.cg = change_basis(g, basis, labels);
  ctx.affine = susy_affine_table(ctx.cg, Scalar::k());
  return ctx;
}

SuperPoly linear_part(const ReductionContext& ctx, const SuperPoly& p) {
  SuperPoly out;
  for (auto& [m, c] : p.terms()) {
    int n = 0;
    for (auto& v : m)
      if (ctx.is_correction(v)) ++n;
    if (n == 1) out.add_term(m, c);
  }
  return out;
}

SuperPoly gamma_linear(const ReductionContext& ctx, int jq) {
  const DualBases& b = ctx.b;
  const LieSuperalgebra& g = ctx.g;
  const Element& q = b.low[jq][0];
  SuperPoly out;
  Scalar k = Scalar::k();
  for (const Chain& ch : enumerate_chains(b, -b.spin2[jq] - 2, 1)) {
    auto [jp, np] = ch.back();
    if (np + 1 >= b.length(jp)) continue;
    SuperPoly r = ctx.var_poly(jp, np + 1);
    int sgn_exp = 0;
    for (size_t t = ch.size(); t-- > 0;) {
      auto [j, n] = ch[t];
      sgn_exp += b.parity[j];
      const Element* prev = &q;
      if (t > 0) prev = b.low_at(ch[t - 1].first, ch[t - 1].second + 1);
      if (!prev) {
        r = SuperPoly();
        break;
      }
      const Element& up = b.up[j][n];
      SuperPoly x = ctx.element_poly(b.sharp(g, g.bracket(*prev, up)));
      r = x * r - r.del().scaled(g.pair(*prev, up) * k);
    }
    out += (sgn_exp & 1) ? -r : r;
  }
  return out;
}

WGenerator solve_generator(const ReductionContext& ctx, int jq) {
  const DualBases& b = ctx.b;
  WGenerator w;
  w.chain = jq;
  w.weight = ctx.weight(ctx.gen(jq));
  SuperPoly q = ctx.var_poly(jq, 0);

  std::vector<Var> pvars;
  for (auto& [j, n] : ctx.flat)
    if (ctx.in_p(j, n)) pvars.push_back(ctx.var(j, n));
  std::vector<Monomial> ansatz;
  for (auto& m : enumerate_monomials(pvars, ctx.weight_fn(), w.weight, ctx.gen(jq).parity())) {
    bool has_corr = false;
    for (auto& v : m)
      if (ctx.is_correction(v)) has_corr = true;
    if (has_corr) ansatz.push_back(m);
  }

  // one equation per (n-variable, λ power, monomial)
  std::map<std::tuple<int, int, Monomial>, int> eq_index;
  SparseSystem sys;
  sys.nvars = static_cast<int>(ansatz.size());
  auto row_of = [&](int nv, int l, const Monomial& m) {
    auto key = std::make_tuple(nv, l, m);
    auto it = eq_index.find(key);
    if (it != eq_index.end()) return it->second;
    int r = static_cast<int>(sys.rows.size());
    sys.rows.emplace_back();
    sys.rhs.emplace_back();
    eq_index.emplace(key, r);
    return r;
  };
  for (size_t t = 0; t < ctx.flat.size(); ++t) {
    auto [j, n] = ctx.flat[t];
    if (b.grade2(j, n) <= 0) continue;
    SuperPoly x = ctx.var_poly(j, n);
    IndetPoly r0 = ctx.rho(ctx.bracket(x, q));
    for (auto& [l, p] : r0.coeffs())
      for (auto& [m, c] : p.terms()) {
        int r = row_of(static_cast<int>(t), l, m);
        sys.rhs[r] -= c;
      }
    for (size_t a = 0; a < ansatz.size(); ++a) {
      IndetPoly ra = ctx.rho(ctx.bracket(x, SuperPoly::monomial(ansatz[a], Scalar(1))));
      for (auto& [l, p] : ra.coeffs())
        for (auto& [m, c] : p.terms()) {
          int r = row_of(static_cast<int>(t), l, m);
          sys.rows[r][static_cast<int>(a)] += c;
        }
    }
  }
  SolveResult res;
  try {
    res = solve(sys);
  } catch (const KDivisionError&) {
    throw SolveError("solution requires division by k-polynomial");
  }
  if (res.status == SolveResult::Inconsistent) throw SolveError("no solution");
  if (res.status == SolveResult::Underdetermined) throw SolveError("non-unique");
  w.value = q;
  for (size_t a = 0; a < ansatz.size(); ++a)
    if (!res.x[a].is_zero()) w.value.add_term(ansatz[a], res.x[a]);
  w.linear_matches = linear_part(ctx, w.value) == (ctx.susy ? gamma_S_linear(ctx, jq) : gamma_linear(ctx, jq));
  return w;
}

std::vector<WGenerator> solve_generators(const ReductionContext& ctx) {
  std::vector<std::future<WGenerator>> jobs;
  for (int j = 0; j < ctx.b.nchains(); ++j)
    jobs.push_back(std::async(std::launch::async, [&ctx, j] { return solve_generator(ctx, j); }));
  std::vector<WGenerator> out;
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

Report check_membership(const ReductionContext& ctx, const WGenerator& w) {
  Report r;
  for (auto& [j, n] : ctx.flat) {
    if (ctx.b.grade2(j, n) <= 0) continue;
    ++r.checked;
    IndetPoly x = ctx.rho(ctx.bracket(ctx.var_poly(j, n), w.value));
    if (!x.is_zero()) r.fail("generator " + std::to_string(w.chain) + " is not invariant under chain (" +
                             std::to_string(j) + "," + std::to_string(n) + ")");
  }
  return r;
}

SuperPoly rewrite_in_generators(const ReductionContext& ctx, const std::vector<WGenerator>& gens, const SuperPoly& a) {
  SuperPoly sym = ctx.pi(a).substitute([&ctx](const Var& v) -> std::optional<SuperPoly> {
    if (!chain_family(v)) return std::nullopt;
    auto [j, n] = ctx.flat[v.index()];
    if (n != 0) throw SolveError("input not in W or generators not canonical");
    return SuperPoly::variable(ctx.gen(j));
  });
  SuperPoly back = sym.substitute([&gens](const Var& v) -> std::optional<SuperPoly> {
    if (v.family() != Family::Gen && v.family() != Family::GenS) return std::nullopt;
    return gens[v.index()].value;
  });
  if (back != a) throw SolveError("input not in W or generators not canonical");
  return sym;
}

IndetPoly rewrite_in_generators(const ReductionContext& ctx, const std::vector<WGenerator>& gens, const IndetPoly& a) {
  return a.map([&](const SuperPoly& x) { return rewrite_in_generators(ctx, gens, x); });
}

IndetPoly w_bracket_direct(const ReductionContext& ctx, const std::vector<WGenerator>& gens, int i, int j) {
  IndetPoly x = ctx.rho(ctx.bracket(gens[i].value, gens[j].value));
  return rewrite_in_generators(ctx, gens, x);
}

IndetPoly w_bracket_closed(const ReductionContext& ctx, int ia, int ib) {
  const DualBases& b = ctx.b;
  const LieSuperalgebra& g = ctx.g;
  const Element& a = b.low[ia][0];
  const Element& bb = b.low[ib][0];
  Scalar k = Scalar::k();
  IndetPoly out(Indet::Lambda);
  out.add(0, ctx.gen_of(g.bracket(a, bb)));
  out.add(1, SuperPoly(k * g.pair(a, bb)));
  IndetPoly sum(Indet::Lambda);
  for (const Chain& ch : enumerate_chains(b, -b.spin2[ib] - 2, b.spin2[ia])) {
    auto [jp, np] = ch.back();
    if (np + 1 >= b.length(jp)) continue;
    const Element& last = b.low[jp][np + 1];
    IndetPoly r(Indet::Lambda);
    r.add(0, ctx.gen_of(g.bracket(last, a)));
    r.add(1, SuperPoly(-k * g.pair(last, a)));
    int sgn_exp = b.parity[jp];
    bool dead = false;
    for (size_t t = ch.size() - 1; t-- > 0;) {
      auto [j, n] = ch[t + 1];
      auto [pj, pn] = ch[t];
      (void)j;
      if (pn + 1 >= b.length(pj)) {
        dead = true;
        break;
      }
      sgn_exp += b.parity[pj];
      const Element& prev = b.low[pj][pn + 1];
      const Element& up = b.up[ch[t + 1].first][n];
      r = r.left_mul(ctx.gen_of(g.bracket(prev, up))) - r.lambda_plus_del().scaled(k * g.pair(prev, up));
    }
    if (dead) continue;
    const Element& up0 = b.up[ch[0].first][ch[0].second];
    r = r.left_mul(ctx.gen_of(g.bracket(bb, up0))) - r.lambda_plus_del().scaled(k * g.pair(bb, up0));
    sum += (sgn_exp & 1) ? -r : r;
  }
  int sab = (b.parity[ia] * b.parity[ib]) & 1;
  return sab ? out + sum : out - sum;
}

BracketTable w_table(const ReductionContext& ctx, const std::vector<WGenerator>& gens, bool closed) {
  BracketTable t;
  t.kind = ctx.susy ? Indet::Chi : Indet::Lambda;
  for (int j = 0; j < ctx.b.nchains(); ++j) t.generators.push_back(ctx.gen(j));
  for (int i = 0; i < ctx.b.nchains(); ++i)
    for (int j = 0; j < ctx.b.nchains(); ++j) {
      IndetPoly v = !closed ? w_bracket_direct(ctx, gens, i, j)
                            : (ctx.susy ? susy_w_bracket_closed(ctx, i, j) : w_bracket_closed(ctx, i, j));
      t.set(ctx.gen(i), ctx.gen(j), v);
    }
  return t;
}

}  // namespace walg
