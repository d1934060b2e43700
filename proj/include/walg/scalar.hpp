#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace walg {

using Rational = mpq_class;

std::string rational_str(const Rational& q);
// a/b in lowest terms
inline Rational half_units(long twice) {
  Rational q(twice, 2);
  q.canonicalize();
  return q;
}
Rational parse_rational(const std::string& s);

// Exact coefficient ring: polynomials in the level k and the BRST constant c
// with Gaussian-rational coefficients.
class Scalar {
 public:
  struct Term {
    uint16_t kdeg = 0;
    uint16_t cdeg = 0;
    Rational re;
    Rational im;
  };

  Scalar() = default;
  Scalar(long v);
  Scalar(const Rational& q);
  static Scalar gauss(const Rational& re, const Rational& im);
  static Scalar i();
  static Scalar k(unsigned deg = 1);
  static Scalar c(unsigned deg = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // requires is_constant()
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator*=(const Scalar& o);
  Scalar operator/(const Scalar& o) const;  // o must be constant
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;

  Scalar substitute(const Scalar* kval, const Scalar* cval) const;
  int k_degree() const;
  int c_degree() const;

  const std::vector<Term>& terms() const { return terms_; }

  // "(1/2)k", "-k³", "i", "(1 + 2i)c"; bare rationals print without parentheses
  std::string str() const;
  // form used as a prefix of a product, e.g. "(1/2)k·" or "2" or "-"
  std::string coeff_prefix(bool& needs_dot) const;
  // machine form: "1/2*k^2 + 3*i*c"
  std::string serialize() const;
  static Scalar parse(const std::string& s);

 private:
  void add_term(const Term& t);
  void normalize();
  std::vector<Term> terms_;  // sorted by (cdeg, kdeg), nonzero
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

class KDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string superscript(long n);

}  // namespace walg
