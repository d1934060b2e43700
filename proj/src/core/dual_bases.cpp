#include "walg/dual_bases.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace walg {

namespace {

Element ad_power(const LieSuperalgebra& g, const Element& a, Element x, int n) {
  for (int i = 0; i < n; ++i) x = g.bracket(a, x);
  return x;
}

// kernel of ad a restricted to the span of basis vectors in the (grade, parity) block
std::vector<Element> block_kernel(const LieSuperalgebra& g, const Element& a, int grade2, int par) {
  std::vector<int> idx;
  for (int i = 0; i < g.dim(); ++i)
    if (g.grade2[i] == grade2 && g.parity[i] == par) idx.push_back(i);
  if (idx.empty()) return {};
  int n = g.dim();
  Matrix m(n, std::vector<Scalar>(idx.size()));
  for (size_t c = 0; c < idx.size(); ++c) {
    Element img = g.bracket(a, g.basis(idx[c]));
    for (int r = 0; r < n; ++r) m[r][c] = img[r];
  }
  std::vector<Element> out;
  for (auto& v : kernel(m, static_cast<int>(idx.size()))) {
    Element x(n);
    for (size_t c = 0; c < idx.size(); ++c) x[idx[c]] = v[c];
    out.push_back(x);
  }
  return out;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rational fact(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Element DualBases::sharp(const LieSuperalgebra& g, const Element& x) const {
  Element r(g.dim());
  for (int j = 0; j < nchains(); ++j) {
    Scalar c = coord(g, x, j, 0);
    if (!c.is_zero()) r = add(r, scale(c, low[j][0]));
  }
  return r;
}

DualBases build_dual_bases(const LieSuperalgebra& g, DualBases::Kind kind) {
  if (!g.sl2) throw std::invalid_argument("no sl2 triple");
  if (kind == DualBases::Odd && !g.osp) throw std::invalid_argument("no osp triple");
  const Element& lower_op = kind == DualBases::Even ? g.sl2->F : g.osp->f;
  const Element& raise_op = kind == DualBases::Even ? g.sl2->E : g.osp->e;
  DualBases b;
  b.kind = kind;
  std::set<int> grades(g.grade2.begin(), g.grade2.end());
  struct Pending {
    int spin2, par;
    Element q, qdual;
  };
  std::vector<Pending> chains;
  for (int gr : grades) {
    if (gr > 0) continue;
    for (int par = 0; par < 2; ++par) {
      auto ker_low = block_kernel(g, lower_op, gr, par);
      if (ker_low.empty()) continue;
      auto ker_high = block_kernel(g, raise_op, -gr, par);
      if (ker_high.size() != ker_low.size()) throw std::runtime_error("kernel dimensions do not match");
      int m = static_cast<int>(ker_low.size());
      Matrix M(m, std::vector<Scalar>(m));  // M[a][j] = (high_a | low_j)
      for (int a = 0; a < m; ++a)
        for (int j = 0; j < m; ++j) M[a][j] = g.pair(ker_high[a], ker_low[j]);
      auto Minv = inverse(M);
      if (!Minv) throw std::runtime_error("kernel pairing is degenerate");
      for (int j = 0; j < m; ++j) {
        Element dual(g.dim());
        // q^j = sum_a X[j][a] high_a with X M = 1
        for (int a = 0; a < m; ++a) dual = add(dual, scale((*Minv)[j][a], ker_high[a]));
        chains.push_back({-gr, par, ker_low[j], dual});
      }
    }
  }
  std::stable_sort(chains.begin(), chains.end(), [](const Pending& x, const Pending& y) {
    if (x.spin2 != y.spin2) return x.spin2 < y.spin2;
    return x.par < y.par;
  });
  for (auto& c : chains) {
    int len = kind == DualBases::Even ? c.spin2 + 1 : 2 * c.spin2 + 1;
    std::vector<Element> up, low;
    std::vector<Scalar> nrm;
    for (int n = 0; n < len; ++n) {
      Element u = ad_power(g, lower_op, c.qdual, n);
      Element l = ad_power(g, raise_op, c.q, n);
      Scalar p = g.pair(u, l);
      if (p.is_zero()) throw std::runtime_error("chain pairing vanishes");
      Scalar C = p.inverse();
      up.push_back(u);
      low.push_back(scale(C, l));
      nrm.push_back(C);
    }
    b.spin2.push_back(c.spin2);
    b.parity.push_back(c.par);
    b.up.push_back(std::move(up));
    b.low.push_back(std::move(low));
    b.norm.push_back(std::move(nrm));
  }
  for (int j = 0; j < b.nchains(); ++j)
    for (int n = 0; n < b.length(j); ++n) b.index_sets[b.grade2(j, n)].push_back({j, n});
  return b;
}

Scalar closed_norm(const DualBases& b, int j, int n) {
  if (b.kind == DualBases::Even) {
    int a2 = b.spin2[j];
    Rational v = fact(n) * fact(n) * binom(a2, n);
    return Scalar(Rational((n % 2) ? -1 : 1) / v);
  }
  int a2 = b.spin2[j];  // 2 alpha
  int m = n / 2;
  if (n % 2 == 0) return Scalar(Rational(1) / (fact(m) * fact(m) * binom(a2, m)));
  int s = b.parity[j] ? -1 : 1;
  return Scalar(Rational(-s) / (fact(m + 1) * fact(m) * binom(a2, m + 1)));
}

std::vector<std::string> verify_dual_bases(const LieSuperalgebra& g, const DualBases& b) {
  std::vector<std::string> bad;
  int total = 0;
  const Element& lower_op = b.kind == DualBases::Even ? g.sl2->F : g.osp->f;
  for (int j = 0; j < b.nchains(); ++j) {
    total += b.length(j);
    if (!is_zero(g.bracket(lower_op, b.up[j].back()))) bad.push_back("chain " + std::to_string(j) + " does not terminate");
    if (!is_zero(g.bracket(lower_op, b.low[j][0]))) bad.push_back("chain " + std::to_string(j) + " base not in kernel");
    for (int n = 0; n < b.length(j); ++n) {
      auto gr = g.grade2_of(b.low[j][n]);
      if (!gr || *gr != b.grade2(j, n)) bad.push_back("chain element has wrong grade");
    }
  }
  if (total != g.dim()) bad.push_back("chains do not span the algebra");
  for (int i = 0; i < b.nchains(); ++i)
    for (int m = 0; m < b.length(i); ++m)
      for (int j = 0; j < b.nchains(); ++j)
        for (int n = 0; n < b.length(j); ++n) {
          Scalar p = g.pair(b.up[i][m], b.low[j][n]);
          Scalar want = (i == j && m == n) ? Scalar(1) : Scalar();
          if (p != want)
            bad.push_back("pairing (" + std::to_string(i) + "," + std::to_string(m) + ")x(" + std::to_string(j) + "," +
                          std::to_string(n) + ") = " + p.str());
        }
  return bad;
}

bool precedes(const DualBases& b, ChainIndex x, ChainIndex y) {
  return b.grade2(y.first, y.second) - b.grade2(x.first, x.second) >= b.gap2();
}

bool bound_precedes(const DualBases& b, int k2, ChainIndex x) { return b.grade2(x.first, x.second) - k2 >= b.gap2(); }

bool precedes_bound(const DualBases& b, ChainIndex x, int k2) { return k2 - b.grade2(x.first, x.second) >= b.gap2(); }

std::vector<Chain> enumerate_chains(const DualBases& b, int lo2, int hi2) {
  std::vector<ChainIndex> members;
  for (auto& [gr, list] : b.index_sets)
    for (auto& x : list)
      if (bound_precedes(b, lo2, x) && precedes_bound(b, x, hi2)) members.push_back(x);
  std::vector<Chain> out;
  Chain cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    for (size_t i = start; i < members.size(); ++i) {
      if (!cur.empty() && !precedes(b, cur.back(), members[i])) continue;
      cur.push_back(members[i]);
      out.push_back(cur);
      self(self, 0);
      cur.pop_back();
    }
  };
  // members sorted by grade; restart from 0 is fine because precedes filters
  rec(rec, 0);
  return out;
}

Tensor tensor_zero(int dim) { return Tensor(dim, std::vector<Scalar>(dim)); }

void tensor_add(Tensor& t, const Scalar& s, const Element& x, const Element& y) {
  for (size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (size_t c = 0; c < y.size(); ++c)
      if (!y[c].is_zero()) t[a][c] += s * x[a] * y[c];
  }
}

std::vector<std::string> check_tensor_identity(const LieSuperalgebra& g, const DualBases& b) {
  std::vector<std::string> bad;
  int n = g.dim();
  int lo = 0, hi = 0;
  for (int v : g.grade2) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  auto at = [&](int t2) -> const std::vector<ChainIndex>& {
    static const std::vector<ChainIndex> none;
    auto it = b.index_sets.find(t2);
    return it == b.index_sets.end() ? none : it->second;
  };
  for (int t2 = lo - 2; t2 <= hi + 2; ++t2) {
    Tensor lhs = tensor_zero(n), rhs = tensor_zero(n);
    if (b.kind == DualBases::Even) {
      for (auto [j, m] : at(-t2))
        if (auto nx = b.low_at(j, m + 1)) tensor_add(lhs, sgn(b.parity[j]), b.up[j][m], *nx);
      for (auto [i, m] : at(t2 - 2))
        if (auto nx = b.low_at(i, m + 1)) tensor_add(rhs, Scalar(-1), *nx, b.up[i][m]);
    } else {
      for (auto [i, m] : at(-t2))
        if (auto nx = b.low_at(i, m + 1)) tensor_add(lhs, Scalar(1), b.up[i][m], *nx);
      for (auto [j, m] : at(t2 - 1))
        if (auto nx = b.low_at(j, m + 1)) tensor_add(rhs, Scalar(-1), *nx, b.up[j][m]);
    }
    if (lhs != rhs) bad.push_back("tensor identity fails at t = " + std::to_string(t2) + "/2");
  }
  return bad;
}

}  // namespace walg
