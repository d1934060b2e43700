#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "walg/scalar.hpp"

namespace walg {

// Variable families.  ∂-flavored families carry ∂-derivatives; D-flavored
// families carry D-derivatives (∂ = D²) and the parity flips with the order.
enum class Family : uint8_t {
  Affine = 0,    // u_a^(n), ∂
  Susy = 1,      // ā^[n], D
  Ghost = 2,     // φ_α^[n], D
  GhostBar = 3,  // φ^ᾱ[n], D
  Block = 4,     // J_ā^[n], D
  Gen = 5,       // W generators, ∂
  GenS = 6,      // SUSY W generators, D
  Aux = 7,       // auxiliary ∂-flavored generators
};

bool is_dflavor(Family f);

struct Var {
  uint64_t key = 0;
  Var() = default;
  Var(Family f, int index, int order, int base_parity);
  Family family() const { return static_cast<Family>(key >> 48); }
  int index() const { return static_cast<int>((key >> 24) & 0xFFFFFF); }
  int order() const { return static_cast<int>((key >> 1) & 0x7FFFFF); }
  int base_parity() const { return static_cast<int>(key & 1); }
  int parity() const { return is_dflavor(family()) ? (base_parity() ^ (order() & 1)) : base_parity(); }
  Var base() const { return Var(family(), index(), 0, base_parity()); }
  Var with_order(int n) const { return Var(family(), index(), n, base_parity()); }
  bool operator<(const Var& o) const { return key < o.key; }
  bool operator==(const Var& o) const { return key == o.key; }
  bool operator!=(const Var& o) const { return key != o.key; }
};

using Monomial = std::vector<Var>;  // sorted, odd variables at most once
int monomial_parity(const Monomial& m);

// Display names for base variables; derivatives are decorated by the renderer.
using Namer = std::function<std::string(const Var&)>;
std::string default_name(const Var& v);

class SuperPoly {
 public:
  SuperPoly() = default;
  explicit SuperPoly(const Scalar& c);
  static SuperPoly variable(const Var& v);
  static SuperPoly monomial(const Monomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly operator+(const SuperPoly& o) const;
  SuperPoly operator-(const SuperPoly& o) const;
  SuperPoly operator*(const SuperPoly& o) const;
  SuperPoly& operator*=(const Scalar& s);
  SuperPoly scaled(const Scalar& s) const;
  bool operator==(const SuperPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SuperPoly& o) const { return !(terms_ == o.terms_); }
  void add_term(const Monomial& m, const Scalar& c);

  // 0 or 1 for homogeneous, -1 for mixed; zero counts as even
  int parity() const;
  std::pair<SuperPoly, SuperPoly> parity_split() const;

  SuperPoly del() const;  // ∂
  SuperPoly D() const;    // odd derivation on D-flavored families
  SuperPoly del_power(int n) const;
  SuperPoly D_power(int n) const;
  // left partial derivative; parity of the operator equals parity of v
  SuperPoly partial(const Var& v) const;
  // variables (with orders) that occur
  std::vector<Var> variables() const;

  // differential algebra homomorphism determined by images of base variables;
  // variables with no image are kept
  SuperPoly substitute(const std::function<std::optional<SuperPoly>(const Var&)>& image) const;
  SuperPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  // Δ of a homogeneous polynomial; nullopt if inhomogeneous (zero is homogeneous of any weight)
  std::optional<Rational> weight(const std::function<Rational(const Var&)>& base_weight) const;
  // drop terms above the given weight
  SuperPoly truncate(const std::function<Rational(const Var&)>& base_weight, const Rational& max) const;
  int degree() const;

  std::string str(const Namer& name = default_name) const;
  std::string to_json() const;
  static SuperPoly from_json(const std::string& text);

 private:
  std::map<Monomial, Scalar> terms_;
};

Rational monomial_weight(const Monomial& m, const std::function<Rational(const Var&)>& base_weight);
std::string var_str(const Var& v, const Namer& name);
std::string monomial_str(const Monomial& m, const Namer& name);
// sign-aware product of monomials; returns 0 sign if the product vanishes
int monomial_mul(const Monomial& a, const Monomial& b, Monomial& out);

// All nonzero monomials in derivatives of `bases` of the given total weight and
// parity (-1 for either).  Base weights must be positive.
std::vector<Monomial> enumerate_monomials(const std::vector<Var>& bases,
                                          const std::function<Rational(const Var&)>& base_weight,
                                          const Rational& target, int parity = -1);

// random polynomial with nterms monomials of degree ≤ max_deg in derivatives ≤ max_order
// of gens; coefficients in {±1,±2,±3}, times k with probability ½ when with_k
SuperPoly random_poly(std::mt19937& rng, const std::vector<Var>& gens, int max_deg, int max_order, int nterms,
                      bool with_k = true);

}  // namespace walg
