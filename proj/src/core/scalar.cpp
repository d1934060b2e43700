#include "walg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace walg {

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  size_t pos = 0;
  if (t[0] == '-' || t[0] == '+') pos = 1;
  bool slash = false;
  for (size_t p = pos; p < t.size(); ++p) {
    if (t[p] == '/') {
      if (slash || p == pos || p + 1 == t.size()) throw std::invalid_argument("bad rational '" + s + "'");
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(t[p]))) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }
  if (t[0] == '+') t = t.substr(1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (slash && q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

std::string superscript(long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char ch : s) {
    if (ch == '-')
      out += "⁻";
    else
      out += digits[ch - '0'];
  }
  return out;
}

Scalar::Scalar(long v) {
  if (v != 0) terms_.push_back(Term{0, 0, Rational(v), Rational(0)});
}

Scalar::Scalar(const Rational& q) {
  if (q != 0) terms_.push_back(Term{0, 0, q, Rational(0)});
}

Scalar Scalar::gauss(const Rational& re, const Rational& im) {
  Scalar s;
  if (re != 0 || im != 0) s.terms_.push_back(Term{0, 0, re, im});
  return s;
}

Scalar Scalar::i() { return gauss(0, 1); }

Scalar Scalar::k(unsigned deg) {
  Scalar s;
  s.terms_.push_back(Term{static_cast<uint16_t>(deg), 0, Rational(1), Rational(0)});
  return s;
}

Scalar Scalar::c(unsigned deg) {
  Scalar s;
  s.terms_.push_back(Term{0, static_cast<uint16_t>(deg), Rational(1), Rational(0)});
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].kdeg == 0 && terms_[0].cdeg == 0);
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].kdeg == 0 && terms_[0].cdeg == 0 && terms_[0].re == 1 &&
         terms_[0].im == 0;
}

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by zero scalar");
  if (!is_constant()) throw KDivisionError("division by non-constant scalar " + str());
  const Rational& a = terms_[0].re;
  const Rational& b = terms_[0].im;
  Rational n = a * a + b * b;
  return gauss(a / n, -b / n);
}

static bool key_less(const Scalar::Term& a, const Scalar::Term& b) {
  if (a.cdeg != b.cdeg) return a.cdeg < b.cdeg;
  return a.kdeg < b.kdeg;
}

void Scalar::normalize() {
  std::sort(terms_.begin(), terms_.end(), key_less);
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().kdeg == t.kdeg && out.back().cdeg == t.cdeg) {
      out.back().re += t.re;
      out.back().im += t.im;
    } else {
      out.push_back(t);
    }
  }
  terms_.clear();
  for (auto& t : out)
    if (t.re != 0 || t.im != 0) terms_.push_back(t);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() || (a < terms_.size() && key_less(terms_[a], o.terms_[b]))) {
      out.push_back(terms_[a++]);
    } else if (a == terms_.size() || key_less(o.terms_[b], terms_[a])) {
      out.push_back(o.terms_[b++]);
    } else {
      Term t = terms_[a++];
      t.re += o.terms_[b].re;
      t.im += o.terms_[b].im;
      ++b;
      if (t.re != 0 || t.im != 0) out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s += -o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s;
  if (terms_.empty() || o.terms_.empty()) return s;
  s.terms_.reserve(terms_.size() * o.terms_.size());
  for (auto& x : terms_)
    for (auto& y : o.terms_) {
      Term t;
      t.kdeg = x.kdeg + y.kdeg;
      t.cdeg = x.cdeg + y.cdeg;
      t.re = x.re * y.re - x.im * y.im;
      t.im = x.re * y.im + x.im * y.re;
      s.terms_.push_back(std::move(t));
    }
  if (s.terms_.size() > 1)
    s.normalize();
  else if (s.terms_[0].re == 0 && s.terms_[0].im == 0)
    s.terms_.clear();
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[i];
    if (a.kdeg != b.kdeg || a.cdeg != b.cdeg || a.re != b.re || a.im != b.im) return false;
  }
  return true;
}

bool Scalar::operator<(const Scalar& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[i];
    if (key_less(a, b)) return true;
    if (key_less(b, a)) return false;
    if (a.re != b.re) return a.re < b.re;
    if (a.im != b.im) return a.im < b.im;
  }
  return terms_.size() < o.terms_.size();
}

static Scalar power(const Scalar& s, unsigned n) {
  Scalar r(1);
  for (unsigned i = 0; i < n; ++i) r *= s;
  return r;
}

Scalar Scalar::substitute(const Scalar* kval, const Scalar* cval) const {
  Scalar r;
  for (auto& t : terms_) {
    Scalar base = gauss(t.re, t.im);
    base *= kval ? power(*kval, t.kdeg) : k(t.kdeg);
    base *= cval ? power(*cval, t.cdeg) : c(t.cdeg);
    r += base;
  }
  return r;
}

int Scalar::k_degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, static_cast<int>(t.kdeg));
  return d;
}

int Scalar::c_degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, static_cast<int>(t.cdeg));
  return d;
}

static std::string gauss_str(const Rational& re, const Rational& im, bool& simple) {
  // simple: printable without parentheses when standing alone
  simple = true;
  if (im == 0) return rational_str(re);
  std::string ims;
  if (im == 1)
    ims = "i";
  else if (im == -1)
    ims = "-i";
  else
    ims = rational_str(im) + "i";
  if (re == 0) return ims;
  simple = false;
  std::string s = rational_str(re);
  if (im < 0)
    s += " - " + (im == -1 ? std::string("i") : rational_str(-im) + "i");
  else
    s += " + " + ims;
  return s;
}

static std::string symbol_part(const Scalar::Term& t) {
  std::string s;
  if (t.kdeg) s += "k" + (t.kdeg > 1 ? superscript(t.kdeg) : std::string());
  if (t.cdeg) {
    if (!s.empty()) s += "·";
    s += "c" + (t.cdeg > 1 ? superscript(t.cdeg) : std::string());
  }
  return s;
}

// one term; returns string including its sign
static std::string term_str(const Scalar::Term& t) {
  std::string sym = symbol_part(t);
  bool simple;
  std::string num = gauss_str(t.re, t.im, simple);
  if (sym.empty()) return num;
  if (t.im == 0) {
    if (t.re < 0) {
      Scalar::Term u = t;
      u.re = -t.re;
      return "-" + term_str(u);
    }
    if (t.re == 1) return sym;
    if (t.re == -1) return "-" + sym;
    if (t.re.get_den() == 1) return num + sym;
    return "(" + num + ")" + sym;
  }
  if (simple && t.re == 0 && (t.im == 1 || t.im == -1)) return num + "·" + sym;
  return "(" + num + ")" + sym;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t n = terms_.size(); n-- > 0;) {
    std::string t = term_str(terms_[n]);
    if (s.empty()) {
      s = t;
    } else if (t[0] == '-') {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  return s;
}

std::string Scalar::coeff_prefix(bool& needs_dot) const {
  needs_dot = false;
  if (terms_.size() == 1 && terms_[0].im == 0 && terms_[0].re < 0) return "-" + (-*this).coeff_prefix(needs_dot);
  if (terms_.size() == 1) {
    const Term& t = terms_[0];
    if (t.kdeg == 0 && t.cdeg == 0) {
      if (t.im == 0) {
        if (t.re == 1) return "";
        if (t.re == -1) return "-";
        if (t.re.get_den() == 1) return rational_str(t.re);
        return "(" + rational_str(t.re) + ")";
      }
      bool simple;
      std::string g = gauss_str(t.re, t.im, simple);
      needs_dot = true;
      return simple ? g : "(" + g + ")";
    }
    needs_dot = true;
    return term_str(t);
  }
  needs_dot = true;
  return "(" + str() + ")";
}

std::string Scalar::serialize() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& t : terms_) {
    std::string part;
    auto add = [&](const std::string& f) {
      if (!part.empty()) part += "*";
      part += f;
    };
    if (t.im == 0) {
      add(rational_str(t.re));
    } else if (t.re == 0) {
      add(rational_str(t.im));
      add("i");
    } else {
      // split into two terms
      std::string a = rational_str(t.re), b = rational_str(t.im) + "*i";
      std::string sym;
      if (t.kdeg) sym += "*k^" + std::to_string(t.kdeg);
      if (t.cdeg) sym += "*c^" + std::to_string(t.cdeg);
      part = a + sym + " + " + b + sym;
      if (!s.empty()) s += " + ";
      s += part;
      continue;
    }
    if (t.kdeg) add("k^" + std::to_string(t.kdeg));
    if (t.cdeg) add("c^" + std::to_string(t.cdeg));
    if (!s.empty()) s += " + ";
    s += part;
  }
  return s;
}

// grammar: sum of terms; term = [sign] factor ([*] factor)*
// factor = rational | 'i' | 'k' ['^' n] | 'c' ['^' n] | '(' sum ')'
namespace {
struct ScalarParser {
  std::string s;
  size_t p = 0;
  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse scalar '" + s + "' at position " + std::to_string(p) + ": " + why);
  }
  unsigned exponent() {
    skip();
    if (p < s.size() && s[p] == '^') {
      ++p;
      skip();
      size_t st = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (st == p) fail("exponent expected");
      return static_cast<unsigned>(std::stoul(s.substr(st, p - st)));
    }
    return 1;
  }
  bool factor_start() {
    skip();
    if (p >= s.size()) return false;
    char ch = s[p];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'i' || ch == 'k' || ch == 'c' || ch == '(';
  }
  Scalar factor() {
    skip();
    if (p >= s.size()) fail("factor expected");
    char ch = s[p];
    if (ch == '(') {
      ++p;
      Scalar v = sum();
      skip();
      if (p >= s.size() || s[p] != ')') fail("')' expected");
      ++p;
      return v;
    }
    if (ch == 'i') {
      ++p;
      return Scalar::i();
    }
    if (ch == 'k') {
      ++p;
      return Scalar::k(exponent());
    }
    if (ch == 'c') {
      ++p;
      return Scalar::c(exponent());
    }
    size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p < s.size() && s[p] == '/') {
      ++p;
      size_t d = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (d == p) fail("denominator expected");
    }
    if (st == p) fail("number expected");
    return Scalar(parse_rational(s.substr(st, p - st)));
  }
  Scalar term() {
    skip();
    int sign = 1;
    while (p < s.size() && (s[p] == '-' || s[p] == '+')) {
      if (s[p] == '-') sign = -sign;
      ++p;
      skip();
    }
    Scalar v = factor();
    for (;;) {
      skip();
      if (p < s.size() && s[p] == '*') {
        ++p;
        v *= factor();
      } else if (factor_start()) {
        v *= factor();
      } else {
        break;
      }
    }
    return sign < 0 ? -v : v;
  }
  Scalar sum() {
    Scalar v = term();
    for (;;) {
      skip();
      if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        v += term();
      } else {
        break;
      }
    }
    return v;
  }
};
}  // namespace

Scalar Scalar::parse(const std::string& s) {
  ScalarParser ps{s};
  Scalar v = ps.sum();
  ps.skip();
  if (ps.p != s.size()) ps.fail("unexpected trailing input");
  return v;
}

void Scalar::add_term(const Term& t) {
  terms_.push_back(t);
  normalize();
}

}  // namespace walg
