#include "walg/lie.hpp"

#include <stdexcept>

namespace walg {

Scalar sgn(int p) { return Scalar((p & 1) ? -1 : 1); }

Element zero_element(int dim) { return Element(dim); }

Element basis_element(int dim, int i) {
  Element e(dim);
  e[i] = Scalar(1);
  return e;
}

Element add(const Element& a, const Element& b) {
  Element r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Element sub(const Element& a, const Element& b) {
  Element r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Element scale(const Scalar& s, const Element& a) {
  Element r(a.size());
  if (s.is_zero()) return r;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = s * a[i];
  return r;
}

bool is_zero(const Element& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string element_str(const Element& a, const std::vector<std::string>& labels) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    bool dot;
    std::string pre = a[i].coeff_prefix(dot);
    std::string term = pre + (dot ? "·" : "") + labels[i];
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s.empty() ? "0" : s;
}

Element LieSuperalgebra::bracket(const Element& x, const Element& y) const {
  int n = dim();
  Element r(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& b = bracket_of(i, j);
      if (b.empty()) continue;
      Scalar f = x[i] * y[j];
      for (auto& [l, c] : b) r[l] += f * c;
    }
  }
  return r;
}

Scalar LieSuperalgebra::pair(const Element& x, const Element& y) const {
  Scalar s;
  int n = dim();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero() || form[i][j].is_zero()) continue;
      s += x[i] * form[i][j] * y[j];
    }
  }
  return s;
}

int LieSuperalgebra::parity_of(const Element& x) const {
  int p = -1;
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (p < 0)
      p = parity[i];
    else if (p != parity[i])
      return -1;
  }
  return p;
}

std::optional<int> LieSuperalgebra::grade2_of(const Element& x) const {
  std::optional<int> g;
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (!g)
      g = grade2[i];
    else if (*g != grade2[i])
      return std::nullopt;
  }
  return g;
}

int LieSuperalgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::vector<std::string> validate_algebra(const LieSuperalgebra& g) {
  std::vector<std::string> bad;
  int n = g.dim();
  auto L = [&](int i) { return g.labels[i]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element x = g.basis(i), y = g.basis(j);
      Element xy = g.bracket(x, y);
      Element yx = g.bracket(y, x);
      int s = sgn_int(g.parity[i] * g.parity[j]);
      if (!is_zero(add(xy, scale(Scalar(s), yx))))
        bad.push_back("super-antisymmetry fails for [" + L(i) + "," + L(j) + "]");
      // parity of the bracket
      for (int l = 0; l < n; ++l)
        if (!xy[l].is_zero() && g.parity[l] != ((g.parity[i] + g.parity[j]) & 1))
          bad.push_back("bracket [" + L(i) + "," + L(j) + "] is not parity homogeneous");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Element x = g.basis(i), y = g.basis(j), z = g.basis(l);
        Element lhs = g.bracket(x, g.bracket(y, z));
        Element rhs = add(g.bracket(g.bracket(x, y), z),
                          scale(Scalar(sgn_int(g.parity[i] * g.parity[j])), g.bracket(y, g.bracket(x, z))));
        if (!is_zero(sub(lhs, rhs))) bad.push_back("super-Jacobi fails for (" + L(i) + "," + L(j) + "," + L(l) + ")");
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& f = g.form[i][j];
      if (!f.is_zero() && g.parity[i] != g.parity[j])
        bad.push_back("form is not even on (" + L(i) + "," + L(j) + ")");
      int s = sgn_int(g.parity[i] * g.parity[j]);
      if (f != Scalar(s) * g.form[j][i]) bad.push_back("form is not supersymmetric on (" + L(i) + "," + L(j) + ")");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Element x = g.basis(i), y = g.basis(j), z = g.basis(l);
        if (g.pair(g.bracket(x, y), z) != g.pair(x, g.bracket(y, z)))
          bad.push_back("form is not invariant on (" + L(i) + "," + L(j) + "," + L(l) + ")");
      }
  if (rank(g.form, n) != n) bad.push_back("form is degenerate");
  return bad;
}

static void expect_eq(std::vector<std::string>& bad, const LieSuperalgebra& g, const Element& lhs, const Element& rhs,
                      const std::string& what) {
  if (!is_zero(sub(lhs, rhs)))
    bad.push_back(what + " fails: got " + element_str(lhs, g.labels) + ", expected " + element_str(rhs, g.labels));
}

std::vector<std::string> validate_sl2(const LieSuperalgebra& g, const Sl2Triple& t) {
  std::vector<std::string> bad;
  if (g.parity_of(t.E) != 0 || g.parity_of(t.H) != 0 || g.parity_of(t.F) != 0)
    bad.push_back("sl2 triple elements must be even and nonzero");
  expect_eq(bad, g, g.bracket(t.H, t.E), scale(Scalar(2), t.E), "[H,E]=2E");
  expect_eq(bad, g, g.bracket(t.H, t.F), scale(Scalar(-2), t.F), "[H,F]=-2F");
  expect_eq(bad, g, g.bracket(t.E, t.F), t.H, "[E,F]=H");
  if (g.pair(t.E, t.F) != Scalar(1)) bad.push_back("(E|F)=1 fails");
  if (g.pair(t.H, t.H) != Scalar(2)) bad.push_back("(H|H)=2 fails");
  return bad;
}

std::vector<std::string> validate_osp(const LieSuperalgebra& g, const OspTriple& t) {
  std::vector<std::string> bad = validate_sl2(g, Sl2Triple{t.E, t.H, t.F});
  if (g.parity_of(t.e) != 1 || g.parity_of(t.f) != 1) bad.push_back("osp odd elements must be odd and nonzero");
  expect_eq(bad, g, g.bracket(t.H, t.e), t.e, "[H,e]=e");
  expect_eq(bad, g, g.bracket(t.H, t.f), scale(Scalar(-1), t.f), "[H,f]=-f");
  expect_eq(bad, g, g.bracket(t.e, t.e), scale(Scalar(2), t.E), "[e,e]=2E");
  expect_eq(bad, g, g.bracket(t.f, t.f), scale(Scalar(-2), t.F), "[f,f]=-2F");
  expect_eq(bad, g, g.bracket(t.e, t.f), scale(Scalar(-1), t.H), "[e,f]=-H");
  expect_eq(bad, g, g.bracket(t.F, t.e), t.f, "[F,e]=f");
  expect_eq(bad, g, g.bracket(t.E, t.f), t.e, "[E,f]=e");
  if (g.pair(t.e, t.f) != Scalar(-2)) bad.push_back("(e|f)=-2 fails");
  return bad;
}

std::vector<std::string> compute_grading(LieSuperalgebra& g, const Element& H) {
  std::vector<std::string> bad;
  int n = g.dim();
  g.grade2.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    Element x = g.basis(i);
    Element hx = g.bracket(H, x);
    // eigenvalue of ad H equals 2 * grade
    for (int l = 0; l < n; ++l)
      if (l != i && !hx[l].is_zero()) {
        bad.push_back("basis vector " + g.labels[i] + " is not an ad(H/2) eigenvector");
        break;
      }
    const Scalar& ev = hx[i];
    if (!ev.is_constant() || !ev.terms().empty() && ev.terms()[0].im != 0) {
      bad.push_back("non-rational ad H eigenvalue on " + g.labels[i]);
      continue;
    }
    Rational v = ev.is_zero() ? Rational(0) : ev.terms()[0].re;
    if (v.get_den() != 1) {
      bad.push_back("grade of " + g.labels[i] + " is not in (1/2)Z");
      continue;
    }
    g.grade2[i] = static_cast<int>(v.get_num().get_si());
  }
  return bad;
}

std::vector<int> indices_with(const LieSuperalgebra& g, const std::function<bool(int)>& pred) {
  std::vector<int> out;
  for (int i = 0; i < g.dim(); ++i)
    if (pred(g.grade2[i])) out.push_back(i);
  return out;
}

LieSuperalgebra change_basis(const LieSuperalgebra& g, const std::vector<Element>& nb,
                             const std::vector<std::string>& new_labels) {
  int n = g.dim();
  if (static_cast<int>(nb.size()) != n) throw std::invalid_argument("change_basis: wrong number of vectors");
  Matrix P(n, std::vector<Scalar>(n));  // columns are new basis vectors
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) P[i][j] = nb[j][i];
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("change_basis: vectors are not a basis");
  auto coords = [&](const Element& x) {
    Element c(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(*Pinv)[i][j].is_zero() && !x[j].is_zero()) c[i] += (*Pinv)[i][j] * x[j];
    return c;
  };
  LieSuperalgebra h;
  h.name = g.name;
  h.labels = new_labels;
  h.parity.resize(n);
  h.brackets.assign(n * n, {});
  h.form.assign(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) {
    int p = g.parity_of(nb[i]);
    if (p < 0) throw std::invalid_argument("change_basis: vector is not parity homogeneous");
    h.parity[i] = p;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element c = coords(g.bracket(nb[i], nb[j]));
      for (int l = 0; l < n; ++l)
        if (!c[l].is_zero()) h.brackets[i * n + j].push_back({l, c[l]});
      h.form[i][j] = g.pair(nb[i], nb[j]);
    }
  if (!g.grade2.empty()) {
    h.grade2.resize(n);
    for (int i = 0; i < n; ++i) {
      auto gr = g.grade2_of(nb[i]);
      if (!gr) throw std::invalid_argument("change_basis: vector is not grade homogeneous");
      h.grade2[i] = *gr;
    }
  }
  if (g.sl2) h.sl2 = Sl2Triple{coords(g.sl2->E), coords(g.sl2->H), coords(g.sl2->F)};
  if (g.osp)
    h.osp = OspTriple{coords(g.osp->E), coords(g.osp->e), coords(g.osp->H), coords(g.osp->f), coords(g.osp->F)};
  return h;
}

}  // namespace walg
