#include "walg/susy_brst.hpp"

#include <future>

#include "walg/susy_pva.hpp"
#include "walg/susy_w.hpp"

namespace walg {

namespace {

int sg(int p) { return (p & 1) ? -1 : 1; }

Scalar ipow(int p) { return (p & 1) ? Scalar::i() : Scalar(1); }
Scalar ipow_inv(int p) { return (p & 1) ? -Scalar::i() : Scalar(1); }

std::string single_label(const LieSuperalgebra& g, const Element& x) {
  int hit = -1, count = 0;
  for (int a = 0; a < g.dim(); ++a)
    if (!x[a].is_zero()) hit = a, ++count;
  if (count == 1 && x[hit].is_one()) return g.labels[hit];
  return "";
}

}  // namespace

Var BrstComplex::j(int a) const { return Var(Family::Susy, a, 0, g.parity[a] ^ 1); }
Var BrstComplex::phi(int al) const { return Var(Family::Ghost, al, 0, g.parity[u[al]]); }
Var BrstComplex::phibar(int al) const { return Var(Family::GhostBar, al, 0, g.parity[u[al]] ^ 1); }

Var BrstComplex::block(int t) const {
  auto [jj, n] = chains.flat[t];
  return Var(Family::Block, t, 0, chains.b.parity_low(jj, n) ^ 1);
}

SuperPoly BrstComplex::j_of(const Element& x) const {
  SuperPoly p;
  for (int a = 0; a < g.dim(); ++a)
    if (!x[a].is_zero()) p += SuperPoly::variable(j(a)).scaled(x[a]);
  return p;
}

SuperPoly BrstComplex::phi_of(const Element& x) const {
  SuperPoly p;
  for (int al = 0; al < nghosts(); ++al)
    if (!x[u[al]].is_zero()) p += SuperPoly::variable(phi(al)).scaled(x[u[al]]);
  return p;
}

SuperPoly BrstComplex::phibar_of(const Element& x) const {
  Element m = zero_element(g.dim());
  for (int a = 0; a < g.dim(); ++a)
    if (g.grade2[a] < 0) m[a] = x[a];
  SuperPoly p;
  for (int al = 0; al < nghosts(); ++al) {
    Scalar c = g.pair(m, g.basis(u[al]));
    if (!c.is_zero()) p += SuperPoly::variable(phibar(al)).scaled(c);
  }
  return p;
}

SuperPoly BrstComplex::building_block(const Element& a) const {
  if (is_zero(a)) return SuperPoly();
  int pa = g.parity_of(a);
  if (pa < 0) throw std::invalid_argument("building block of an inhomogeneous element");
  SuperPoly out = j_of(a);
  for (int be = 0; be < nghosts(); ++be) {
    int pb = g.parity[u[be]];
    SuperPoly t = SuperPoly::variable(phibar(be)) * phi_of(g.bracket(g.basis(u[be]), a));
    out -= t.scaled(Scalar(sg(pa * pb + pa + pb)));
  }
  return out;
}

Namer BrstComplex::names() const {
  return [this](const Var& v) -> std::string {
    switch (v.family()) {
      case Family::Susy:
        return "j_" + g.labels[v.index()];
      case Family::Ghost:
        return "φ_" + g.labels[u[v.index()]];
      case Family::GhostBar:
        return "φ^" + g.labels[u[v.index()]];
      case Family::Block: {
        auto [jj, n] = chains.flat[v.index()];
        std::string l = single_label(g, chains.b.low[jj][n]);
        return "J_" + (l.empty() ? "r" + std::to_string(jj) + "_" + std::to_string(n) : l);
      }
      case Family::GenS: {
        std::string w = chains.gen_names()(v);
        return "E" + w.substr(1);
      }
      default:
        return default_name(v);
    }
  };
}

BrstComplex build_complex(const LieSuperalgebra& g, const Scalar& k) {
  if (!g.osp) throw std::invalid_argument("algebra has no osp(1|2) data");
  BrstComplex cx;
  cx.g = g;
  cx.chains = make_susy_context(g);
  std::vector<int> neg;
  for (int a = 0; a < g.dim(); ++a) {
    if (g.grade2[a] > 0) cx.u.push_back(a);
    if (g.grade2[a] < 0) neg.push_back(a);
  }
  int n = cx.nghosts();
  if (static_cast<int>(neg.size()) != n) throw std::invalid_argument("n and n_- differ in dimension");
  // P[ν][β] = (e_ν | u_β); u^α = Σ_ν (P^{-1})[α][ν] e_ν
  Matrix P(n, std::vector<Scalar>(n));
  for (int v = 0; v < n; ++v)
    for (int be = 0; be < n; ++be) P[v][be] = g.pair(g.basis(neg[v]), g.basis(cx.u[be]));
  auto inv = inverse(P);
  if (!inv) throw std::invalid_argument("form does not pair n with n_-");
  for (int al = 0; al < n; ++al) {
    Element x = zero_element(g.dim());
    for (int v = 0; v < n; ++v) x[neg[v]] = (*inv)[al][v];
    cx.udual.push_back(x);
  }

  BracketTable& t = cx.table;
  t.kind = Indet::Chi;
  for (int a = 0; a < g.dim(); ++a) t.generators.push_back(cx.j(a));
  for (int al = 0; al < n; ++al) t.generators.push_back(cx.phi(al));
  for (int al = 0; al < n; ++al) t.generators.push_back(cx.phibar(al));
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      // [j_ā χ j_b̄] = s(a,b̄) j_{[a,b]} + kχ(a|b)
      IndetPoly v(Indet::Chi);
      int s = sg(g.parity[a] * (g.parity[b] + 1));
      v.add(0, cx.j_of(g.bracket(g.basis(a), g.basis(b))).scaled(Scalar(s)));
      v.add(1, SuperPoly(k * g.pair(g.basis(a), g.basis(b))));
      if (!v.is_zero()) t.set(cx.j(a), cx.j(b), v);
    }
  for (int al = 0; al < n; ++al)
    for (int be = 0; be < n; ++be) {
      Scalar p = g.pair(cx.udual[al], g.basis(cx.u[be]));
      if (p.is_zero()) continue;
      t.set(cx.phibar(al), cx.phi(be), IndetPoly::constant(Indet::Chi, SuperPoly(p)));
      t.set(cx.phi(be), cx.phibar(al), IndetPoly::constant(Indet::Chi, SuperPoly(p)));
    }
  return cx;
}

SuperPoly build_d(const BrstComplex& cx, const Scalar& c) {
  const LieSuperalgebra& g = cx.g;
  SuperPoly d;
  for (int al = 0; al < cx.nghosts(); ++al) {
    Element ua = g.basis(cx.u[al]);
    SuperPoly t = SuperPoly::variable(cx.j(cx.u[al])) - SuperPoly(c * g.pair(g.osp->f, ua));
    d += t * SuperPoly::variable(cx.phibar(al));
  }
  for (int al = 0; al < cx.nghosts(); ++al)
    for (int be = 0; be < cx.nghosts(); ++be) {
      int pa = g.parity[cx.u[al]], pb = g.parity[cx.u[be]];
      SuperPoly t = cx.phi_of(g.bracket(g.basis(cx.u[al]), g.basis(cx.u[be]))) *
                    SuperPoly::variable(cx.phibar(be)) * SuperPoly::variable(cx.phibar(al));
      d += t.scaled(Scalar(Rational(sg(pa * pb + pb), 2)));
    }
  return d;
}

SuperPoly OddDerivation::operator()(const SuperPoly& a) const {
  std::map<uint64_t, SuperPoly> cache;
  auto image = [&](const Var& v) -> const SuperPoly& {
    auto it = cache.find(v.key);
    if (it != cache.end()) return it->second;
    SuperPoly r;
    auto b = images.find(v.base().key);
    if (b != images.end()) {
      r = b->second.D_power(v.order());
      if (v.order() & 1) r = -r;
    }
    return cache.emplace(v.key, r).first->second;
  };
  SuperPoly out;
  for (auto& [m, c] : a.terms()) {
    int odd = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      const SuperPoly& img = image(m[i]);
      if (!img.is_zero()) {
        SuperPoly left = SuperPoly::monomial(Monomial(m.begin(), m.begin() + i), c * Scalar(sg(odd)));
        SuperPoly right = SuperPoly::monomial(Monomial(m.begin() + i + 1, m.end()), Scalar(1));
        out += left * img * right;
      }
      odd += m[i].parity();
    }
  }
  return out;
}

OddDerivation zero_mode(const BrstComplex& cx, const SuperPoly& d) {
  OddDerivation d0;
  for (auto& v : cx.table.generators)
    d0.images[v.key] = susy_master_bracket(d, SuperPoly::variable(v), cx.table).coeff(0);
  return d0;
}

Report verify_d_squared(const BrstComplex& cx, const SuperPoly& d) {
  Report r;
  Namer nm = cx.names();
  ++r.checked;
  IndetPoly dd = susy_master_bracket(d, d, cx.table);
  if (!dd.is_zero()) r.fail("{d_χ d} = " + dd.str(nm));
  OddDerivation d0 = zero_mode(cx, d);
  for (auto& v : cx.table.generators) {
    ++r.checked;
    SuperPoly x = d0(d0(SuperPoly::variable(v)));
    if (!x.is_zero()) r.fail("d_[0]² " + nm(v) + " = " + x.str(nm));
  }
  return r;
}

SuperPoly MinusComplex::to_complex(const SuperPoly& x) const {
  return x.substitute([this](const Var& v) -> std::optional<SuperPoly> {
    if (v.family() != Family::Block) return std::nullopt;
    auto [j, n] = cx.chains.flat[v.index()];
    return cx.building_block(cx.chains.b.low[j][n]);
  });
}

SuperPoly MinusComplex::from_complex(const SuperPoly& x) const {
  const LieSuperalgebra& g = cx.g;
  const ReductionContext& ch = cx.chains;
  SuperPoly y = x.substitute([&](const Var& v) -> std::optional<SuperPoly> {
    if (v.family() != Family::Susy) return std::nullopt;
    int a = v.index();
    if (g.grade2[a] > 0) throw SolveError("element outside S(R_-): j_" + g.labels[a]);
    // j_a = J_a + Σ_β s(a,β)s(a)s(β) φ^β̄ φ_{[u_β,a]}
    Element ea = g.basis(a);
    SuperPoly r;
    for (size_t t = 0; t < ch.flat.size(); ++t) {
      auto [j, n] = ch.flat[t];
      Scalar c = ch.b.coord(g, ea, j, n);
      if (!c.is_zero()) r += SuperPoly::variable(cx.block(static_cast<int>(t))).scaled(c);
    }
    int pa = g.parity[a];
    for (int be = 0; be < cx.nghosts(); ++be) {
      int pb = g.parity[cx.u[be]];
      SuperPoly t = SuperPoly::variable(cx.phibar(be)) * cx.phi_of(g.bracket(g.basis(cx.u[be]), ea));
      r += t.scaled(Scalar(sg(pa * pb + pa + pb)));
    }
    return r;
  });
  for (auto& v : y.variables())
    if (v.family() != Family::Block && v.family() != Family::GhostBar)
      throw SolveError("element outside S(R_-): " + cx.names()(v));
  return y;
}

int MinusComplex::p2(const Var& v) const {
  if (v.family() == Family::GhostBar) return 1 - cx.g.grade2[cx.u[v.index()]];
  return cx.chains.grade2(v);
}

int MinusComplex::p2(const Monomial& m) const {
  int s = 0;
  for (auto& v : m) s += p2(v);
  return s;
}

Rational MinusComplex::weight(const Var& v) const {
  if (v.family() == Family::GhostBar) return half_units(cx.g.grade2[cx.u[v.index()]]);
  if (v.family() == Family::GenS) return cx.chains.weight(v);
  return half_units(1 - cx.chains.grade2(v));
}

std::function<Rational(const Var&)> MinusComplex::weight_fn() const {
  return [this](const Var& v) { return weight(v); };
}

MinusComplex restrict_minus(const BrstComplex& cx, const Scalar& c) {
  MinusComplex m;
  m.cx = cx;
  m.c = c;
  const ReductionContext& ch = cx.chains;
  for (size_t t = 0; t < ch.flat.size(); ++t) {
    auto [j, n] = ch.flat[t];
    if (ch.b.grade2(j, n) <= 0) m.blocks.push_back(cx.block(static_cast<int>(t)));
  }
  std::vector<Var> gens = m.blocks;
  for (int al = 0; al < cx.nghosts(); ++al) gens.push_back(cx.phibar(al));

  OddDerivation full = zero_mode(cx, build_d(cx, c));
  for (auto& v : gens) m.d0.images[v.key] = m.from_complex(full(m.to_complex(SuperPoly::variable(v))));

  m.table.kind = Indet::Chi;
  m.table.generators = gens;
  for (auto& x : gens)
    for (auto& y : gens) {
      IndetPoly br = susy_master_bracket(m.to_complex(SuperPoly::variable(x)), m.to_complex(SuperPoly::variable(y)),
                                         cx.table);
      br = br.map([&m](const SuperPoly& p) { return m.from_complex(p); });
      if (!br.is_zero()) m.table.set(x, y, br);
    }
  return m;
}

BrstGenerator cohomology_generator(const MinusComplex& m, int j) {
  const ReductionContext& ch = m.cx.chains;
  BrstGenerator e;
  e.chain = j;
  Var lead = m.cx.block(ch.flat_of.at({j, 0}));
  e.weight = m.weight(lead);
  int lead_p = m.p2(lead);

  std::map<int, std::vector<Monomial>> levels;
  for (auto& mono : enumerate_monomials(m.blocks, m.weight_fn(), e.weight, lead.parity())) {
    bool kernel_only = true;
    for (auto& v : mono)
      if (ch.flat[v.index()].second != 0) kernel_only = false;
    if (kernel_only) continue;
    int p = m.p2(mono);
    if (p > lead_p) levels[p].push_back(mono);
  }

  e.value = SuperPoly::variable(lead);
  for (;;) {
    SuperPoly r = m.d0(e.value);
    if (r.is_zero()) break;
    int p0 = INT32_MAX;
    for (auto& [mono, c] : r.terms()) p0 = std::min(p0, m.p2(mono));
    auto it = levels.find(p0);
    if (it == levels.end()) throw SolveError("filtration correction failed");
    const std::vector<Monomial>& unknowns = it->second;

    // leading filtration part: d_gr X = -r_{p0}
    std::map<Monomial, int> row_of;
    SparseSystem sys;
    sys.nvars = static_cast<int>(unknowns.size());
    auto row = [&](const Monomial& mono) {
      auto f = row_of.find(mono);
      if (f != row_of.end()) return f->second;
      int idx = static_cast<int>(sys.rows.size());
      sys.rows.emplace_back();
      sys.rhs.emplace_back();
      row_of.emplace(mono, idx);
      return idx;
    };
    for (auto& [mono, c] : r.terms())
      if (m.p2(mono) == p0) sys.rhs[row(mono)] -= c;
    for (size_t a = 0; a < unknowns.size(); ++a) {
      SuperPoly da = m.d0(SuperPoly::monomial(unknowns[a], Scalar(1)));
      for (auto& [mono, c] : da.terms())
        if (m.p2(mono) == p0) sys.rows[row(mono)][static_cast<int>(a)] += c;
    }
    SolveResult res;
    try {
      res = solve(sys);
    } catch (const KDivisionError&) {
      throw SolveError("filtration correction failed: parameter-dependent pivot");
    }
    if (res.status != SolveResult::Unique) throw SolveError("filtration correction failed");
    for (size_t a = 0; a < unknowns.size(); ++a)
      if (!res.x[a].is_zero()) e.value.add_term(unknowns[a], res.x[a]);
    levels.erase(levels.begin(), std::next(it));
    ++e.steps;
  }
  return e;
}

std::vector<BrstGenerator> cohomology_generators(const MinusComplex& m) {
  std::vector<std::future<BrstGenerator>> jobs;
  for (int j = 0; j < m.cx.chains.b.nchains(); ++j)
    jobs.push_back(std::async(std::launch::async, [&m, j] { return cohomology_generator(m, j); }));
  std::vector<BrstGenerator> out;
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

SuperPoly rewrite_in_cohomology(const MinusComplex& m, const std::vector<BrstGenerator>& gens, const SuperPoly& x) {
  const ReductionContext& ch = m.cx.chains;
  SuperPoly kernel_part;
  for (auto& [mono, c] : x.terms()) {
    bool keep = true;
    for (auto& v : mono) {
      if (v.family() != Family::Block) throw SolveError("representative not reduced");
      if (ch.flat[v.index()].second != 0) keep = false;
    }
    if (keep) kernel_part.add_term(mono, c);
  }
  SuperPoly sym = kernel_part.substitute([&ch](const Var& v) -> std::optional<SuperPoly> {
    return SuperPoly::variable(ch.gen(ch.flat[v.index()].first));
  });
  SuperPoly back = sym.substitute([&gens](const Var& v) -> std::optional<SuperPoly> {
    if (v.family() != Family::GenS) return std::nullopt;
    return gens[v.index()].value;
  });
  if (back != x) throw SolveError("representative not reduced");
  return sym;
}

IndetPoly rewrite_in_cohomology(const MinusComplex& m, const std::vector<BrstGenerator>& gens, const IndetPoly& x) {
  return x.map([&](const SuperPoly& p) { return rewrite_in_cohomology(m, gens, p); });
}

BracketTable brst_bracket_table(const MinusComplex& m, const std::vector<BrstGenerator>& gens) {
  const ReductionContext& ch = m.cx.chains;
  BracketTable t;
  t.kind = Indet::Chi;
  for (auto& e : gens) t.generators.push_back(ch.gen(e.chain));
  for (auto& a : gens)
    for (auto& b : gens) {
      IndetPoly br = susy_master_bracket(a.value, b.value, m.table);
      t.set(ch.gen(a.chain), ch.gen(b.chain), rewrite_in_cohomology(m, gens, br));
    }
  return t;
}

SuperPoly twist_to_blocks(const BrstComplex& cx, const SuperPoly& w) {
  const ReductionContext& ch = cx.chains;
  return w.substitute([&](const Var& v) -> std::optional<SuperPoly> {
    if (v.family() != Family::Susy) return std::nullopt;
    auto [j, n] = ch.flat[v.index()];
    return SuperPoly::variable(cx.block(v.index())).scaled(ipow_inv(ch.b.parity_low(j, n)));
  });
}

Report compare_with_reduction(const MinusComplex& m, const std::vector<BrstGenerator>& e, const BracketTable& te,
                              const std::vector<WGenerator>& w, const BracketTable& tw) {
  Report r;
  const ReductionContext& ch = m.cx.chains;
  Namer nm = m.cx.names();
  if (m.c != Scalar::i()) r.fail("the comparison needs c = i");
  if (e.size() != w.size()) {
    r.fail("generator counts differ");
    return r;
  }
  std::vector<int> par(e.size());
  for (size_t j = 0; j < e.size(); ++j) par[j] = ch.b.parity[e[j].chain];
  for (size_t j = 0; j < e.size(); ++j) {
    ++r.checked;
    SuperPoly expect = twist_to_blocks(m.cx, w[j].value).scaled(ipow(par[j]));
    if (expect != e[j].value)
      r.fail("generator " + std::to_string(j) + ": " + e[j].value.str(nm) + " vs " + expect.str(nm));
  }
  auto untwist = [&](const SuperPoly& p) {
    return p.substitute([&](const Var& v) -> std::optional<SuperPoly> {
      if (v.family() != Family::GenS) return std::nullopt;
      return SuperPoly::variable(v).scaled(ipow_inv(par[v.index()]));
    });
  };
  for (size_t a = 0; a < e.size(); ++a)
    for (size_t b = 0; b < e.size(); ++b) {
      ++r.checked;
      Var ga = ch.gen(static_cast<int>(a)), gb = ch.gen(static_cast<int>(b));
      const IndetPoly* x = tw.get(ga, gb);
      const IndetPoly* y = te.get(ga, gb);
      IndetPoly expect = x ? x->map(untwist).scaled(ipow(par[a]) * ipow(par[b])) : IndetPoly(Indet::Chi);
      IndetPoly got = y ? *y : IndetPoly(Indet::Chi);
      if (expect != got)
        r.fail("bracket (" + nm(ga) + "," + nm(gb) + "): " + got.str(nm) + " vs " + expect.str(nm));
    }
  return r;
}

}  // namespace walg
