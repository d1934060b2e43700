#include "walg/susy_pva.hpp"

#include <stdexcept>

namespace walg {

ChiDWord ChiDWord::one() {
  ChiDWord w;
  w.add(0, 0, Scalar(1));
  return w;
}

ChiDWord ChiDWord::chi() {
  ChiDWord w;
  w.add(1, 0, Scalar(1));
  return w;
}

ChiDWord ChiDWord::D() {
  ChiDWord w;
  w.add(0, 1, Scalar(1));
  return w;
}

void ChiDWord::add(int n, int m, const Scalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_pair(n, m);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) c_.erase(it);
}

ChiDWord ChiDWord::operator+(const ChiDWord& o) const {
  ChiDWord w = *this;
  for (auto& [k, s] : o.c_) w.add(k.first, k.second, s);
  return w;
}

ChiDWord ChiDWord::scaled(const Scalar& s) const {
  ChiDWord w;
  for (auto& [k, v] : c_) w.add(k.first, k.second, v * s);
  return w;
}

static ChiDWord chi_pow(int n) {
  ChiDWord w = ChiDWord::one();
  for (int i = 0; i < n; ++i) w = ChiDWord::chi() * w;
  return w;
}

static ChiDWord d_pow(int n) {
  ChiDWord w = ChiDWord::one();
  for (int i = 0; i < n; ++i) w = w * ChiDWord::D();
  return w;
}

// D^b χ^c in normal form
static ChiDWord d_pow_chi_pow(int b, int c) {
  if (b == 0) return chi_pow(c);
  ChiDWord inner = d_pow_chi_pow(b - 1, c);
  ChiDWord out;
  for (auto& [k, s] : inner.coeffs()) {
    int n = k.first, m = k.second;
    if (n % 2 == 0) {
      out = out + (chi_pow(n) * d_pow(m + 1)).scaled(s);
    } else {
      // D χ^n = -χ^n D - 2χ^{n+1}
      out = out + (chi_pow(n) * d_pow(m + 1)).scaled(-s) + (chi_pow(n + 1) * d_pow(m)).scaled(Scalar(-2) * s);
    }
  }
  return out;
}

ChiDWord ChiDWord::operator*(const ChiDWord& o) const {
  // pure powers multiply without reordering
  ChiDWord w;
  for (auto& [ka, sa] : c_)
    for (auto& [kb, sb] : o.c_) {
      if (ka.second == 0) {
        w.add(ka.first + kb.first, kb.second, sa * sb);
      } else if (kb.first == 0) {
        w.add(ka.first, ka.second + kb.second, sa * sb);
      } else {
        ChiDWord mid = d_pow_chi_pow(ka.second, kb.first);
        for (auto& [km, sm] : mid.c_) w.add(ka.first + km.first, km.second + kb.second, sa * sb * sm);
      }
    }
  return w;
}

IndetPoly ChiDWord::apply(const IndetPoly& x) const {
  IndetPoly out(Indet::Chi);
  for (auto& [k, s] : c_) {
    // χ^n D^m x with D acting by the module rule: D = (D+χ) - χ
    IndetPoly y = x;
    for (int i = 0; i < k.second; ++i) y = y.D_plus_chi() - y.shifted(1);
    out += y.shifted(k.first).scaled(s);
  }
  return out;
}

std::string ChiDWord::str() const {
  std::string s;
  for (auto& [k, v] : c_) {
    std::string t = "(" + v.str() + ")";
    if (k.first) t += "χ" + (k.first > 1 ? superscript(k.first) : "");
    if (k.second) t += "D" + (k.second > 1 ? superscript(k.second) : "");
    s += (s.empty() ? "" : " + ") + t;
  }
  return s.empty() ? "0" : s;
}

SuperPoly susy_var(const LieSuperalgebra& g, int i) {
  return SuperPoly::variable(Var(Family::Susy, i, 0, (g.parity[i] + 1) & 1));
}

SuperPoly susy_element(const Element& x, const LieSuperalgebra& g) {
  SuperPoly p;
  for (int i = 0; i < g.dim(); ++i)
    if (!x[i].is_zero()) p += susy_var(g, i).scaled(x[i]);
  return p;
}

BracketTable susy_affine_table(const LieSuperalgebra& g, const Scalar& k) {
  BracketTable t;
  t.kind = Indet::Chi;
  for (int i = 0; i < g.dim(); ++i) t.generators.push_back(Var(Family::Susy, i, 0, (g.parity[i] + 1) & 1));
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      IndetPoly v(Indet::Chi);
      SuperPoly lin;
      for (auto& [l, c] : g.bracket_of(i, j)) lin += susy_var(g, l).scaled(c);
      Scalar s = sgn(g.parity[i]);
      v.add(0, lin.scaled(s));
      v.add(1, SuperPoly(s * k * g.form[i][j]));
      t.set(t.generators[i], t.generators[j], v);
    }
  return t;
}

IndetPoly susy_skew_transform(const IndetPoly& x) {
  IndetPoly out(Indet::Chi);
  for (auto& [n, p] : x.coeffs()) {
    IndetPoly z = IndetPoly::constant(Indet::Chi, p);
    for (int r = 0; r < n; ++r) z = -z.D_plus_chi();
    out += z;
  }
  return out;
}

namespace {

// the derivation part: Σ_{x in b} s(a+1+x, b+x) (∂b/∂x) · value(x)
template <class F>
IndetPoly right_derivation(int pa, const SuperPoly& b, F value_of) {
  IndetPoly out(Indet::Chi);
  auto [be, bo] = b.parity_split();
  const SuperPoly* parts[2] = {&be, &bo};
  for (int pb = 0; pb < 2; ++pb) {
    const SuperPoly& B = *parts[pb];
    if (B.is_zero()) continue;
    for (const Var& x : B.variables()) {
      SuperPoly Y = B.partial(x);
      if (Y.is_zero()) continue;
      IndetPoly v = value_of(x);
      if (v.is_zero()) continue;
      int px = x.parity();
      int e = ((pa + 1 + px) * (pb + px)) & 1;
      IndetPoly term = v.left_mul(Y);
      out += e ? -term : term;
    }
  }
  return out;
}

IndetPoly apply_D_plus_chi(IndetPoly v, int n, int sign_par) {
  // ((-s)(D+χ))^n with s = (-1)^sign_par
  for (int r = 0; r < n; ++r) {
    v = v.D_plus_chi();
    if (!(sign_par & 1)) v = -v;
  }
  return v;
}

IndetPoly structural(const SuperPoly& a, const SuperPoly& b, const BracketTable& t) {
  IndetPoly out(Indet::Chi);
  auto [ae, ao] = a.parity_split();
  const SuperPoly* aparts[2] = {&ae, &ao};
  for (int pa = 0; pa < 2; ++pa) {
    const SuperPoly& A = *aparts[pa];
    if (A.is_zero()) continue;
    std::map<uint64_t, IndetPoly> cache;  // {A_χ u_j} per base generator
    auto on_base = [&](const Var& uj) -> const IndetPoly& {
      auto it = cache.find(uj.key);
      if (it != cache.end()) return it->second;
      int pj = uj.parity();
      // {u_j χ A} via the right derivation with sesquilinearity
      IndetPoly inner = right_derivation(pj, A, [&](const Var& y) {
        const IndetPoly* T = t.get(uj, y);
        if (!T) return IndetPoly(Indet::Chi);
        return apply_D_plus_chi(*T, y.order(), pj);
      });
      IndetPoly v = susy_skew_transform(inner);
      if ((pa * pj) & 1) v = -v;
      return cache.emplace(uj.key, v).first->second;
    };
    out += right_derivation(pa, b, [&](const Var& x) {
      IndetPoly v = on_base(x.base());
      return apply_D_plus_chi(v, x.order(), pa);
    });
  }
  return out;
}

// (χ+D)^n on a ChiPoly, module rule
IndetPoly chi_plus_D(IndetPoly v, int n) {
  for (int i = 0; i < n; ++i) v = v.D_plus_chi();
  return v;
}

// (χ+D)^l 1 = (-1)^{l(l-1)/2} χ^l, so the literal arrow is off by that sign for l ≥ 2
IndetPoly printed(const SuperPoly& a, const SuperPoly& b, const BracketTable& t, bool normalise_arrow) {
  IndetPoly out(Indet::Chi);
  auto [ae, ao] = a.parity_split();
  auto [be, bo] = b.parity_split();
  const SuperPoly* aparts[2] = {&ae, &ao};
  const SuperPoly* bparts[2] = {&be, &bo};
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb) {
      const SuperPoly& A = *aparts[pa];
      const SuperPoly& B = *bparts[pb];
      if (A.is_zero() || B.is_zero()) continue;
      for (const Var& vi : A.variables()) {
        SuperPoly Ai = A.partial(vi);
        if (Ai.is_zero()) continue;
        int m = vi.order();
        int si = vi.base().parity();
        int pAi = (pa + vi.parity()) & 1;
        IndetPoly Z = chi_plus_D(IndetPoly::constant(Indet::Chi, Ai), m);
        for (const Var& vj : B.variables()) {
          const IndetPoly* T = t.get(vi, vj);
          if (!T) continue;
          SuperPoly Bj = B.partial(vj);
          if (Bj.is_zero()) continue;
          int n = vj.order();
          int sj = vj.base().parity();
          int pBj = (pb + vj.parity()) & 1;
          int pu = (vi.base().parity() + vj.base().parity()) & 1;
          IndetPoly arrow(Indet::Chi);
          for (auto& [l, c] : T->coeffs()) {
            IndetPoly w = chi_plus_D(Z, l).left_mul(c);
            int e = pu * l;
            if (normalise_arrow) e += l * (l - 1) / 2;
            arrow += (e & 1) ? -w : w;
          }
          IndetPoly term = chi_plus_D(arrow, n).left_mul(Bj);
          int uja = (vj.parity() + pa) & 1;
          int e = pBj + pBj * uja + pAi * vj.parity();
          e += n + m * n + m * (m + 1) / 2 + si * (n + m) + sj * m;
          out += (e & 1) ? -term : term;
        }
      }
    }
  return out;
}

}  // namespace

IndetPoly susy_master_bracket(const SuperPoly& a, const SuperPoly& b, const BracketTable& t, SusyMasterForm form) {
  if (form == SusyMasterForm::Printed) return printed(a, b, t, false);
  if (form == SusyMasterForm::Expanded) return printed(a, b, t, true);
  return structural(a, b, t);
}

BiPoly susy_jacobi_defect(const SuperPoly& a, const SuperPoly& b, const SuperPoly& c, const BracketTable& t) {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw std::invalid_argument("susy_jacobi_defect needs homogeneous a, b");
  BiPoly d(Indet::Chi);
  // [a_χ γ^n B_n] = (-s(a))^n γ^n [a_χ B_n];  χ^p γ^n = (-1)^{pn} ... stored as χ^p γ^n
  IndetPoly bc = susy_master_bracket(b, c, t);
  for (auto& [n, Bn] : bc.coeffs()) {
    IndetPoly x = susy_master_bracket(a, Bn, t);
    for (auto& [p, Z] : x.coeffs()) {
      // γ^n χ^p = (-1)^{np} χ^p γ^n
      int e = n + n * pa + n * p;
      d.add(p, n, (e & 1) ? -Z : Z);
    }
  }
  // + s(a)[[a_χ b]_{χ+γ} c] with [χ^n A_n _{χ+γ} c] = (-χ)^n [A_n _{χ+γ} c]
  IndetPoly ab = susy_master_bracket(a, b, t);
  for (auto& [n, An] : ab.coeffs()) {
    IndetPoly x = susy_master_bracket(An, c, t);
    for (auto& [r, C] : x.coeffs()) {
      // (χ+γ)^r = (χ²+γ²)^{r/2} (χ+γ)^{r mod 2}
      int h = r / 2;
      for (int s = 0; s <= h; ++s) {
        Scalar bn(binomial(h, s));
        int xp = 2 * s, yp = 2 * (h - s);
        auto put = [&](int xa, int yb) {
          int e = n + pa;  // (-1)^n from (-χ)^n, s(a) from the identity's sign
          d.add(n + xa, yb, (e & 1) ? C.scaled(-bn) : C.scaled(bn));
        };
        if (r % 2 == 0) {
          put(xp, yp);
        } else {
          put(xp + 1, yp);
          put(xp, yp + 1);
        }
      }
    }
  }
  // + s(a,b)s(a)s(b)[b_γ[a_χ c]] with [b_γ χ^n X_n] = (-s(b)χ)^n [b_γ X_n]
  IndetPoly ac = susy_master_bracket(a, c, t);
  int sabab = (pa * pb + pa + pb) & 1;
  for (auto& [n, Xn] : ac.coeffs()) {
    IndetPoly y = susy_master_bracket(b, Xn, t);
    for (auto& [m, Y] : y.coeffs()) {
      int e = sabab + n + n * pb;
      d.add(n, m, (e & 1) ? -Y : Y);
    }
  }
  return d;
}

Report check_susy_skew(const BracketTable& t, const Namer& name) {
  Report r;
  for (auto& a : t.generators)
    for (auto& b : t.generators) {
      ++r.checked;
      const IndetPoly* ab = t.get(a, b);
      const IndetPoly* ba = t.get(b, a);
      IndetPoly lhs = ab ? *ab : IndetPoly(Indet::Chi);
      IndetPoly rhs = ba ? susy_skew_transform(*ba) : IndetPoly(Indet::Chi);
      if ((a.parity() * b.parity()) & 1) rhs = -rhs;
      if (lhs != rhs) r.fail("skew-symmetry fails for (" + name(a) + ", " + name(b) + ")");
    }
  return r;
}

Report check_susy_jacobi(const BracketTable& t, const Namer& name) {
  Report r;
  for (auto& a : t.generators)
    for (auto& b : t.generators)
      for (auto& c : t.generators) {
        ++r.checked;
        BiPoly d = susy_jacobi_defect(SuperPoly::variable(a), SuperPoly::variable(b), SuperPoly::variable(c), t);
        if (!d.is_zero()) r.fail("Jacobi fails for (" + name(a) + ", " + name(b) + ", " + name(c) + "): " + d.str(name));
      }
  return r;
}

ReducedPva reduce_to_pva(const BracketTable& susy, const Namer& name) {
  ReducedPva out;
  std::map<uint64_t, int> pos;
  for (size_t p = 0; p < susy.generators.size(); ++p) pos[susy.generators[p].base().key] = static_cast<int>(p);
  auto conv = [pos](const SuperPoly& x) {
    SuperPoly r;
    for (auto& [m, c] : x.terms()) {
      SuperPoly term(c);
      for (auto& v : m) {
        auto it = pos.find(v.base().key);
        if (it == pos.end()) throw std::invalid_argument("reduce_to_pva: unknown generator");
        int b = v.order() % 2;
        term = term * SuperPoly::variable(Var(Family::Aux, 2 * it->second + b, v.order() / 2, v.base_parity() ^ b));
      }
      r += term;
    }
    return r;
  };
  out.to_pva = conv;
  std::vector<Var> gens = susy.generators;
  out.names = [gens, name](const Var& v) {
    const Var& g = gens[v.index() / 2];
    return v.index() % 2 ? "D(" + name(g) + ")" : name(g);
  };
  for (size_t p = 0; p < gens.size(); ++p)
    for (int b = 0; b < 2; ++b)
      out.table.generators.push_back(Var(Family::Aux, 2 * static_cast<int>(p) + b, 0, gens[p].base_parity() ^ b));
  out.table.kind = Indet::Lambda;
  for (size_t p = 0; p < gens.size(); ++p)
    for (size_t q = 0; q < gens.size(); ++q)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          SuperPoly x = SuperPoly::variable(gens[p].with_order(a));
          SuperPoly y = SuperPoly::variable(gens[q].with_order(b));
          IndetPoly br = susy_master_bracket(x, y, susy);
          IndetPoly lam(Indet::Lambda);
          for (auto& [n, c] : br.coeffs()) {
            if (n % 2 == 0) continue;
            int k = (n - 1) / 2;
            SuperPoly cc = conv(c);
            lam.add(k, (k % 2) ? -cc : cc);
          }
          out.table.set(out.table.generators[2 * p + a], out.table.generators[2 * q + b], lam);
        }
  return out;
}

}  // namespace walg
