#include "walg/indet.hpp"

#include <json.hpp>

namespace walg {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

IndetPoly IndetPoly::constant(Indet kind, const SuperPoly& p) { return power(kind, 0, p); }

IndetPoly IndetPoly::power(Indet kind, int n, const SuperPoly& p) {
  IndetPoly r(kind);
  r.add(n, p);
  return r;
}

SuperPoly IndetPoly::coeff(int n) const {
  auto it = c_.find(n);
  return it == c_.end() ? SuperPoly() : it->second;
}

void IndetPoly::add(int n, const SuperPoly& p) {
  if (p.is_zero()) return;
  auto it = c_.find(n);
  if (it == c_.end()) {
    c_.emplace(n, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) c_.erase(it);
}

IndetPoly& IndetPoly::operator+=(const IndetPoly& o) {
  for (auto& [n, p] : o.c_) add(n, p);
  return *this;
}

IndetPoly& IndetPoly::operator-=(const IndetPoly& o) {
  for (auto& [n, p] : o.c_) add(n, -p);
  return *this;
}

IndetPoly IndetPoly::operator+(const IndetPoly& o) const {
  IndetPoly r = *this;
  r += o;
  return r;
}

IndetPoly IndetPoly::operator-(const IndetPoly& o) const {
  IndetPoly r = *this;
  r -= o;
  return r;
}

IndetPoly IndetPoly::operator-() const {
  IndetPoly r = *this;
  for (auto& [n, p] : r.c_) p = -p;
  return r;
}

IndetPoly IndetPoly::scaled(const Scalar& s) const {
  IndetPoly r(kind_);
  if (s.is_zero()) return r;
  for (auto& [n, p] : c_) r.c_.emplace(n, p.scaled(s));
  return r;
}

IndetPoly IndetPoly::shifted(int k) const {
  IndetPoly r(kind_);
  for (auto& [n, p] : c_) r.c_.emplace(n + k, p);
  return r;
}

IndetPoly IndetPoly::lambda_plus_del() const {
  IndetPoly r(kind_);
  for (auto& [n, p] : c_) {
    r.add(n + 1, p);
    r.add(n, p.del());
  }
  return r;
}

IndetPoly IndetPoly::D_plus_chi() const {
  IndetPoly r(kind_);
  for (auto& [n, p] : c_) {
    if (n % 2 == 0) {
      r.add(n, p.D());
      r.add(n + 1, p);
    } else {
      r.add(n, -p.D());
      r.add(n + 1, -p);
    }
  }
  return r;
}

IndetPoly IndetPoly::left_mul(const SuperPoly& q) const {
  IndetPoly r(kind_);
  if (kind_ == Indet::Lambda) {
    for (auto& [n, p] : c_) r.add(n, q * p);
    return r;
  }
  auto [ev, od] = q.parity_split();
  for (auto& [n, p] : c_) {
    r.add(n, ev * p);
    if (!od.is_zero()) r.add(n, (n % 2) ? -(od * p) : od * p);
  }
  return r;
}

IndetPoly IndetPoly::right_mul(const SuperPoly& q) const {
  IndetPoly r(kind_);
  for (auto& [n, p] : c_) r.add(n, p * q);
  return r;
}

IndetPoly IndetPoly::map(const std::function<SuperPoly(const SuperPoly&)>& f) const {
  IndetPoly r(kind_);
  for (auto& [n, p] : c_) r.add(n, f(p));
  return r;
}

static std::string indet_symbol(Indet kind, int n, int which = 0) {
  std::string s = kind == Indet::Lambda ? (which ? "μ" : "λ") : (which ? "γ" : "χ");
  if (n == 1) return s;
  return s + superscript(n);
}

std::string IndetPoly::str(const Namer& name) const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [n, p] : c_) {
    std::string body = p.str(name);
    std::string term;
    if (n == 0) {
      term = body;
    } else if (p.size() == 1 && p.is_constant()) {
      bool dot;
      std::string pre = p.constant_term().coeff_prefix(dot);
      term = pre + indet_symbol(kind_, n);
    } else if (p.size() == 1) {
      term = body + "·" + indet_symbol(kind_, n);
    } else {
      term = "(" + body + ")·" + indet_symbol(kind_, n);
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

std::string IndetPoly::to_json() const {
  nlohmann::json a = nlohmann::json::object();
  a["indeterminate"] = kind_ == Indet::Lambda ? "lambda" : "chi";
  nlohmann::json cs = nlohmann::json::array();
  for (auto& [n, p] : c_) cs.push_back({{"power", n}, {"coeff", nlohmann::json::parse(p.to_json())}});
  a["coeffs"] = cs;
  return a.dump();
}

IndetPoly IndetPoly::from_json(const std::string& text) {
  auto a = nlohmann::json::parse(text);
  IndetPoly r(a.at("indeterminate").get<std::string>() == "chi" ? Indet::Chi : Indet::Lambda);
  for (auto& t : a.at("coeffs")) r.add(t.at("power").get<int>(), SuperPoly::from_json(t.at("coeff").dump()));
  return r;
}

void BiPoly::add(int a, int b, const SuperPoly& p) {
  if (p.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) c_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (auto& [k, p] : o.c_) add(k.first, k.second, p);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (auto& [k, p] : o.c_) add(k.first, k.second, -p);
  return *this;
}

BiPoly BiPoly::scaled(const Scalar& s) const {
  BiPoly r(kind_);
  for (auto& [k, p] : c_) r.add(k.first, k.second, p.scaled(s));
  return r;
}

std::string BiPoly::str(const Namer& name) const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [k, p] : c_) {
    std::string t = "(" + p.str(name) + ")";
    if (k.first) t += "·" + indet_symbol(kind_, k.first);
    if (k.second) t += "·" + indet_symbol(kind_, k.second, 1);
    s += (s.empty() ? "" : " + ") + t;
  }
  return s;
}

}  // namespace walg
