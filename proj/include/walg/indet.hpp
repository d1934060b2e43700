#pragma once

#include <map>
#include <string>
#include <utility>

#include "walg/superpoly.hpp"

namespace walg {

enum class Indet { Lambda, Chi };

// Polynomial in λ (even) or χ (odd) with SuperPoly coefficients, stored with
// the indeterminate on the left: Σ χ^n X_n.
class IndetPoly {
 public:
  explicit IndetPoly(Indet kind = Indet::Lambda) : kind_(kind) {}
  static IndetPoly constant(Indet kind, const SuperPoly& p);
  static IndetPoly power(Indet kind, int n, const SuperPoly& p);

  Indet kind() const { return kind_; }
  const std::map<int, SuperPoly>& coeffs() const { return c_; }
  SuperPoly coeff(int n) const;
  bool is_zero() const { return c_.empty(); }
  int max_power() const { return c_.empty() ? -1 : c_.rbegin()->first; }

  void add(int n, const SuperPoly& p);
  IndetPoly& operator+=(const IndetPoly& o);
  IndetPoly& operator-=(const IndetPoly& o);
  IndetPoly operator+(const IndetPoly& o) const;
  IndetPoly operator-(const IndetPoly& o) const;
  IndetPoly operator-() const;
  IndetPoly scaled(const Scalar& s) const;
  bool operator==(const IndetPoly& o) const { return kind_ == o.kind_ && c_ == o.c_; }
  bool operator!=(const IndetPoly& o) const { return !(*this == o); }

  // multiplication by the indeterminate power on the left
  IndetPoly shifted(int n) const;
  // (λ+∂) acting on everything
  IndetPoly lambda_plus_del() const;
  // (D+χ) with the module rule D χ + χ D = -2χ²
  IndetPoly D_plus_chi() const;
  // p · X (sign s(p)^n when passing χ^n)
  IndetPoly left_mul(const SuperPoly& p) const;
  IndetPoly right_mul(const SuperPoly& p) const;
  IndetPoly map(const std::function<SuperPoly(const SuperPoly&)>& f) const;

  std::string str(const Namer& name = default_name) const;
  std::string to_json() const;
  static IndetPoly from_json(const std::string& text);

 private:
  Indet kind_;
  std::map<int, SuperPoly> c_;
};

// Two-indeterminate polynomial Σ x^a y^b P_ab with both powers on the left, x before y.
class BiPoly {
 public:
  explicit BiPoly(Indet kind = Indet::Lambda) : kind_(kind) {}
  void add(int a, int b, const SuperPoly& p);
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly scaled(const Scalar& s) const;
  bool is_zero() const { return c_.empty(); }
  const std::map<std::pair<int, int>, SuperPoly>& coeffs() const { return c_; }
  std::string str(const Namer& name = default_name) const;

 private:
  Indet kind_;
  std::map<std::pair<int, int>, SuperPoly> c_;
};

Rational binomial(int n, int k);

}  // namespace walg
