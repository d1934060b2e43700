#include "walg/pva.hpp"

#include <stdexcept>

namespace walg {

const IndetPoly* BracketTable::get(const Var& a, const Var& b) const {
  auto it = entries.find({a.base().key, b.base().key});
  return it == entries.end() ? nullptr : &it->second;
}

void BracketTable::set(const Var& a, const Var& b, const IndetPoly& v) {
  auto key = std::make_pair(a.base().key, b.base().key);
  if (v.is_zero())
    entries.erase(key);
  else
    entries[key] = v;
}

SuperPoly affine_var(const LieSuperalgebra& g, int i) { return SuperPoly::variable(Var(Family::Affine, i, 0, g.parity[i])); }

SuperPoly affine_element(const Element& x, const LieSuperalgebra& g) {
  SuperPoly p;
  for (int i = 0; i < g.dim(); ++i)
    if (!x[i].is_zero()) p += affine_var(g, i).scaled(x[i]);
  return p;
}

BracketTable affine_table(const LieSuperalgebra& g, const Scalar& k) {
  BracketTable t;
  t.kind = Indet::Lambda;
  for (int i = 0; i < g.dim(); ++i) t.generators.push_back(Var(Family::Affine, i, 0, g.parity[i]));
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      IndetPoly v(Indet::Lambda);
      SuperPoly lin;
      for (auto& [l, c] : g.bracket_of(i, j)) lin += affine_var(g, l).scaled(c);
      v.add(0, lin);
      v.add(1, SuperPoly(k * g.form[i][j]));
      t.set(t.generators[i], t.generators[j], v);
    }
  return t;
}

static IndetPoly minus_lambda_minus_del(const IndetPoly& x) { return -x.lambda_plus_del(); }

IndetPoly master_bracket(const SuperPoly& f, const SuperPoly& g, const BracketTable& t, MasterSign msign) {
  IndetPoly out(Indet::Lambda);
  auto [fe, fo] = f.parity_split();
  auto [ge, go] = g.parity_split();
  const SuperPoly* fparts[2] = {&fe, &fo};
  const SuperPoly* gparts[2] = {&ge, &go};
  for (int pf = 0; pf < 2; ++pf) {
    const SuperPoly& F = *fparts[pf];
    if (F.is_zero()) continue;
    for (int pg = 0; pg < 2; ++pg) {
      const SuperPoly& G = *gparts[pg];
      if (G.is_zero()) continue;
      auto gvars = G.variables();
      for (const Var& vi : F.variables()) {
        SuperPoly X = F.partial(vi);
        if (X.is_zero()) continue;
        int m = vi.order();
        IndetPoly Z = IndetPoly::constant(Indet::Lambda, X);
        for (int r = 0; r < m; ++r) Z = minus_lambda_minus_del(Z);
        // powers (λ+∂)^l Z, computed lazily
        std::vector<IndetPoly> Zpow{Z};
        std::map<uint64_t, IndetPoly> Wcache;
        for (const Var& vj : gvars) {
          const IndetPoly* T = t.get(vi, vj);
          if (!T) continue;
          auto wit = Wcache.find(vj.base().key);
          if (wit == Wcache.end()) {
            IndetPoly W(Indet::Lambda);
            for (auto& [l, c] : T->coeffs()) {
              while (static_cast<int>(Zpow.size()) <= l) Zpow.push_back(Zpow.back().lambda_plus_del());
              W += Zpow[l].left_mul(c);
            }
            wit = Wcache.emplace(vj.base().key, W).first;
          }
          SuperPoly Y = G.partial(vj);
          if (Y.is_zero()) continue;
          IndetPoly V = wit->second;
          for (int r = 0; r < vj.order(); ++r) V = V.lambda_plus_del();
          int pi = vi.parity(), pj = vj.parity();
          int e = pf * pg + pi * pj;
          if (msign == MasterSign::Corrected)
            e += pg * pj + pj;
          else
            e += pg * pi + pi;
          IndetPoly term = V.left_mul(Y);
          out += (e & 1) ? -term : term;
        }
      }
    }
  }
  return out;
}

IndetPoly skew_transform(const IndetPoly& x) {
  IndetPoly out(Indet::Lambda);
  for (auto& [n, p] : x.coeffs()) {
    IndetPoly z = IndetPoly::constant(Indet::Lambda, p);
    for (int r = 0; r < n; ++r) z = -z.lambda_plus_del();
    out += z;
  }
  return out;
}

BiPoly jacobi_defect(const SuperPoly& a, const SuperPoly& b, const SuperPoly& c, const BracketTable& t) {
  if (a.parity() < 0 || b.parity() < 0) throw std::invalid_argument("jacobi_defect needs homogeneous a, b");
  BiPoly d(Indet::Lambda);
  IndetPoly bc = master_bracket(b, c, t);
  for (auto& [m, Bm] : bc.coeffs()) {
    IndetPoly x = master_bracket(a, Bm, t);
    for (auto& [n, Z] : x.coeffs()) d.add(n, m, Z);
  }
  IndetPoly ab = master_bracket(a, b, t);
  for (auto& [n, An] : ab.coeffs()) {
    IndetPoly x = master_bracket(An, c, t);
    for (auto& [r, C] : x.coeffs())
      for (int s = 0; s <= r; ++s) d.add(n + s, r - s, C.scaled(-Scalar(binomial(r, s))));
  }
  int sab = (a.parity() * b.parity()) & 1;
  IndetPoly ac = master_bracket(a, c, t);
  for (auto& [n, Xn] : ac.coeffs()) {
    IndetPoly y = master_bracket(b, Xn, t);
    for (auto& [m, Y] : y.coeffs()) d.add(n, m, sab ? Y : -Y);
  }
  return d;
}

Report check_skew(const BracketTable& t, const Namer& name) {
  Report r;
  for (auto& a : t.generators)
    for (auto& b : t.generators) {
      ++r.checked;
      const IndetPoly* ab = t.get(a, b);
      const IndetPoly* ba = t.get(b, a);
      IndetPoly lhs = ab ? *ab : IndetPoly(Indet::Lambda);
      IndetPoly rhs = ba ? skew_transform(*ba) : IndetPoly(Indet::Lambda);
      if ((a.parity() * b.parity()) % 2 == 0) rhs = -rhs;
      if (lhs != rhs) r.fail("skew-symmetry fails for (" + name(a) + ", " + name(b) + ")");
    }
  return r;
}

Report check_jacobi(const BracketTable& t, const Namer& name) {
  Report r;
  for (auto& a : t.generators)
    for (auto& b : t.generators)
      for (auto& c : t.generators) {
        ++r.checked;
        BiPoly d = jacobi_defect(SuperPoly::variable(a), SuperPoly::variable(b), SuperPoly::variable(c), t);
        if (!d.is_zero()) r.fail("Jacobi fails for (" + name(a) + ", " + name(b) + ", " + name(c) + "): " + d.str(name));
      }
  return r;
}

Report check_bracket_weights(const BracketTable& t, const std::function<Rational(const Var&)>& weight,
                             const Namer& name) {
  Report r;
  Rational shift = t.kind == Indet::Lambda ? Rational(1) : Rational(1, 2);
  Rational step = t.kind == Indet::Lambda ? Rational(1) : Rational(1, 2);
  for (auto& [key, v] : t.entries) {
    ++r.checked;
    Var a, b;
    a.key = key.first;
    b.key = key.second;
    for (auto& [n, p] : v.coeffs()) {
      auto w = p.weight(weight);
      Rational want = weight(a) + weight(b) - step * n - shift;
      if (!w || *w != want) r.fail("bracket (" + name(a) + ", " + name(b) + ") is not weight homogeneous");
    }
  }
  return r;
}

}  // namespace walg
