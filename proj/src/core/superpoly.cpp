#include "walg/superpoly.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace walg {

bool is_dflavor(Family f) {
  switch (f) {
    case Family::Susy:
    case Family::Ghost:
    case Family::GhostBar:
    case Family::Block:
    case Family::GenS:
      return true;
    default:
      return false;
  }
}

Var::Var(Family f, int index, int order, int base_parity) {
  key = (static_cast<uint64_t>(f) << 48) | (static_cast<uint64_t>(index) << 24) |
        (static_cast<uint64_t>(order) << 1) | static_cast<uint64_t>(base_parity & 1);
}

int monomial_parity(const Monomial& m) {
  int p = 0;
  for (auto& v : m) p ^= v.parity();
  return p;
}

std::string default_name(const Var& v) {
  static const char* fam[] = {"u", "ū", "φ", "φ̄", "J", "w", "τ", "x"};
  return std::string(fam[static_cast<int>(v.family())]) + std::to_string(v.index());
}

int monomial_mul(const Monomial& a, const Monomial& b, Monomial& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  // odd count of a's suffix
  int odd_rest = 0;
  for (auto& v : a) odd_rest += v.parity();
  int sign = 1;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      odd_rest -= a[i].parity();
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      if (b[j].parity() && (odd_rest & 1)) sign = -sign;
      out.push_back(b[j++]);
    } else {
      if (a[i].parity()) return 0;
      odd_rest -= a[i].parity();
      out.push_back(a[i++]);
    }
  }
  return sign;
}

SuperPoly::SuperPoly(const Scalar& c) {
  if (!c.is_zero()) terms_[Monomial{}] = c;
}

SuperPoly SuperPoly::variable(const Var& v) {
  SuperPoly p;
  p.terms_[Monomial{v}] = Scalar(1);
  return p;
}

SuperPoly SuperPoly::monomial(const Monomial& m, const Scalar& c) {
  SuperPoly p;
  if (!c.is_zero()) p.terms_[m] = c;
  return p;
}

bool SuperPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar SuperPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar() : it->second;
}

void SuperPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const {
  SuperPoly p = *this;
  p += o;
  return p;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const {
  SuperPoly p = *this;
  p -= o;
  return p;
}

SuperPoly SuperPoly::operator*(const SuperPoly& o) const {
  SuperPoly p;
  if (terms_.empty() || o.terms_.empty()) return p;
  Monomial prod;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      int s = monomial_mul(ma, mb, prod);
      if (!s) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      p.add_term(prod, c);
    }
  return p;
}

SuperPoly& SuperPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SuperPoly SuperPoly::scaled(const Scalar& s) const {
  SuperPoly p = *this;
  p *= s;
  return p;
}

int SuperPoly::parity() const {
  int p = -1;
  for (auto& [m, c] : terms_) {
    int q = monomial_parity(m);
    if (p < 0)
      p = q;
    else if (p != q)
      return -1;
  }
  return p < 0 ? 0 : p;
}

std::pair<SuperPoly, SuperPoly> SuperPoly::parity_split() const {
  SuperPoly ev, od;
  for (auto& [m, c] : terms_) (monomial_parity(m) ? od : ev).terms_.emplace(m, c);
  return {ev, od};
}

// applies a derivation of parity `odd` that raises the order of each variable by step
static SuperPoly raise_orders(const std::map<Monomial, Scalar>& terms, int step, bool odd) {
  SuperPoly out;
  Monomial prefix, suffix, tmp, prod;
  for (auto& [m, c] : terms) {
    int pre_odd = 0;
    for (size_t t = 0; t < m.size(); ++t) {
      prefix.assign(m.begin(), m.begin() + t);
      suffix.assign(m.begin() + t + 1, m.end());
      Monomial single{m[t].with_order(m[t].order() + step)};
      int s1 = monomial_mul(prefix, single, tmp);
      int s2 = s1 ? monomial_mul(tmp, suffix, prod) : 0;
      if (s2) {
        int sign = s1 * s2;
        if (odd && (pre_odd & 1)) sign = -sign;
        out.add_term(prod, sign < 0 ? -c : c);
      }
      pre_odd += m[t].parity();
    }
  }
  return out;
}

SuperPoly SuperPoly::del() const {
  // ∂ on ∂-flavored variables raises order by 1, on D-flavored by 2
  SuperPoly a, b;
  std::map<Monomial, Scalar> ta, tb;
  for (auto& [m, c] : terms_) {
    bool has_d = false, has_p = false;
    for (auto& v : m) (is_dflavor(v.family()) ? has_d : has_p) = true;
    if (has_d && has_p) throw std::logic_error("mixed-flavor monomial");
    (has_d ? tb : ta).emplace(m, c);
  }
  SuperPoly out = raise_orders(ta, 1, false);
  out += raise_orders(tb, 2, false);
  return out;
}

SuperPoly SuperPoly::D() const {
  for (auto& [m, c] : terms_)
    for (auto& v : m)
      if (!is_dflavor(v.family())) throw std::logic_error("D applied to a ∂-flavored variable");
  return raise_orders(terms_, 1, true);
}

SuperPoly SuperPoly::del_power(int n) const {
  SuperPoly p = *this;
  for (int i = 0; i < n; ++i) p = p.del();
  return p;
}

SuperPoly SuperPoly::D_power(int n) const {
  SuperPoly p = *this;
  for (int i = 0; i < n; ++i) p = p.D();
  return p;
}

SuperPoly SuperPoly::partial(const Var& v) const {
  SuperPoly out;
  for (auto& [m, c] : terms_) {
    int sign = 1;
    for (size_t t = 0; t < m.size(); ++t) {
      if (m[t] == v) {
        Monomial rest;
        for (size_t s = 0; s < m.size(); ++s)
          if (s != t) rest.push_back(m[s]);
        // count multiplicity for even variables (only first occurrence contributes times multiplicity)
        int mult = 0;
        for (auto& x : m)
          if (x == v) ++mult;
        Scalar cc = c * Scalar(static_cast<long>(mult));
        if (sign < 0) cc = -cc;
        out.add_term(rest, cc);
        break;
      }
      if (m[t].parity() && v.parity()) sign = -sign;
    }
  }
  return out;
}

std::vector<Var> SuperPoly::variables() const {
  std::vector<Var> vs;
  for (auto& [m, c] : terms_)
    for (auto& v : m) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

SuperPoly SuperPoly::substitute(const std::function<std::optional<SuperPoly>(const Var&)>& image) const {
  std::map<uint64_t, SuperPoly> cache;
  auto img = [&](const Var& v) -> SuperPoly {
    auto it = cache.find(v.key);
    if (it != cache.end()) return it->second;
    auto b = image(v.base());
    SuperPoly r;
    if (!b) {
      r = variable(v);
    } else {
      r = *b;
      if (is_dflavor(v.family()))
        r = r.D_power(v.order());
      else
        r = r.del_power(v.order());
    }
    cache.emplace(v.key, r);
    return r;
  };
  SuperPoly out;
  for (auto& [m, c] : terms_) {
    SuperPoly t{c};
    for (auto& v : m) t = t * img(v);
    out += t;
  }
  return out;
}

SuperPoly SuperPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  SuperPoly out;
  for (auto& [m, c] : terms_) out.add_term(m, f(c));
  return out;
}

Rational monomial_weight(const Monomial& m, const std::function<Rational(const Var&)>& base_weight) {
  Rational w = 0;
  for (auto& v : m) {
    w += base_weight(v.base());
    w += is_dflavor(v.family()) ? half_units(v.order()) : Rational(v.order());
  }
  return w;
}

std::optional<Rational> SuperPoly::weight(const std::function<Rational(const Var&)>& base_weight) const {
  std::optional<Rational> w;
  for (auto& [m, c] : terms_) {
    Rational x = monomial_weight(m, base_weight);
    if (!w)
      w = x;
    else if (*w != x)
      return std::nullopt;
  }
  return w ? w : Rational(0);
}

SuperPoly SuperPoly::truncate(const std::function<Rational(const Var&)>& base_weight, const Rational& max) const {
  SuperPoly out;
  for (auto& [m, c] : terms_)
    if (monomial_weight(m, base_weight) <= max) out.terms_.emplace(m, c);
  return out;
}

int SuperPoly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::string var_str(const Var& v, const Namer& name) {
  std::string base = name(v.base());
  int n = v.order();
  if (n == 0) return base;
  if (is_dflavor(v.family())) return "D" + (n > 1 ? superscript(n) : std::string()) + "(" + base + ")";
  return "∂" + (n > 1 ? superscript(n) : std::string()) + base;
}

std::string monomial_str(const Monomial& m, const Namer& name) {
  std::string s;
  for (auto& v : m) {
    if (!s.empty()) s += "·";
    s += var_str(v, name);
  }
  return s;
}

std::string SuperPoly::str(const Namer& name) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Monomial*, const Scalar*>> order;
  for (auto& [m, c] : terms_) order.push_back({&m, &c});
  std::stable_sort(order.begin(), order.end(), [](auto& x, auto& y) {
    if (x.first->size() != y.first->size()) return x.first->size() < y.first->size();
    return *y.first < *x.first;
  });
  std::string s;
  for (auto& [m, c] : order) {
    std::string term;
    if (m->empty()) {
      term = c->str();
      if (c->terms().size() > 1 && !s.empty()) term = "(" + term + ")";
    } else {
      bool dot;
      std::string pre = c->coeff_prefix(dot);
      term = pre + (dot ? "·" : "") + monomial_str(*m, name);
    }
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

using nlohmann::json;

std::string SuperPoly::to_json() const {
  json a = json::array();
  for (auto& [m, c] : terms_) {
    json fs = json::array();
    for (auto& v : m)
      fs.push_back(json::array({static_cast<int>(v.family()), v.index(), v.order(), v.base_parity()}));
    a.push_back({{"coeff", c.serialize()}, {"factors", fs}});
  }
  return a.dump();
}

SuperPoly SuperPoly::from_json(const std::string& text) {
  json a = json::parse(text);
  SuperPoly p;
  for (auto& t : a) {
    SuperPoly term{Scalar::parse(t.at("coeff").get<std::string>())};
    for (auto& f : t.at("factors"))
      term = term * variable(Var(static_cast<Family>(f.at(0).get<int>()), f.at(1).get<int>(), f.at(2).get<int>(),
                                 f.at(3).get<int>()));
    p += term;
  }
  return p;
}

std::vector<Monomial> enumerate_monomials(const std::vector<Var>& bases,
                                          const std::function<Rational(const Var&)>& base_weight,
                                          const Rational& target, int parity) {
  std::vector<Var> atoms;
  std::vector<Rational> wts;
  for (const Var& b : bases) {
    Rational step = is_dflavor(b.family()) ? Rational(1, 2) : Rational(1);
    Rational w = base_weight(b);
    if (w <= 0) throw std::invalid_argument("enumerate_monomials needs positive weights");
    for (int n = 0; w + step * n <= target; ++n) {
      atoms.push_back(b.with_order(n));
      wts.push_back(w + step * n);
    }
  }
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, size_t start, const Rational& left) -> void {
    if (left == 0) {
      Monomial m = cur;
      std::sort(m.begin(), m.end());
      if (parity < 0 || monomial_parity(m) == parity) out.push_back(m);
      return;
    }
    for (size_t i = start; i < atoms.size(); ++i) {
      if (wts[i] > left) continue;
      cur.push_back(atoms[i]);
      self(self, atoms[i].parity() ? i + 1 : i, left - wts[i]);
      cur.pop_back();
    }
  };
  rec(rec, 0, target);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SuperPoly random_poly(std::mt19937& rng, const std::vector<Var>& gens, int max_deg, int max_order, int nterms,
                      bool with_k) {
  SuperPoly p;
  std::uniform_int_distribution<int> gen(0, static_cast<int>(gens.size()) - 1), ord(0, max_order), deg(1, max_deg),
      coef(-3, 3), kd(0, 1);
  for (int t = 0; t < nterms; ++t) {
    SuperPoly m(Scalar(1));
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m = m * SuperPoly::variable(gens[gen(rng)].with_order(ord(rng)));
    int c = coef(rng);
    if (c == 0) c = 1;
    Scalar s(c);
    if (with_k && kd(rng)) s = s * Scalar::k();
    p += m.scaled(s);
  }
  return p;
}

}  // namespace walg
