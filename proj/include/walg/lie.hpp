#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "walg/linalg.hpp"
#include "walg/scalar.hpp"

namespace walg {

using Element = std::vector<Scalar>;

Element zero_element(int dim);
Element basis_element(int dim, int i);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Scalar& s, const Element& a);
bool is_zero(const Element& a);
std::string element_str(const Element& a, const std::vector<std::string>& labels);

struct Sl2Triple {
  Element E, H, F;
};

struct OspTriple {
  Element E, e, H, f, F;
};

class LieSuperalgebra {
 public:
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> parity;
  // brackets[i * dim + j]: sparse coefficients of [e_i, e_j]
  std::vector<std::vector<std::pair<int, Scalar>>> brackets;
  Matrix form;
  // twice the ad(H/2)-eigenvalue of each basis vector (set by compute_grading)
  std::vector<int> grade2;
  std::optional<Sl2Triple> sl2;
  std::optional<OspTriple> osp;

  int dim() const { return static_cast<int>(labels.size()); }
  const std::vector<std::pair<int, Scalar>>& bracket_of(int i, int j) const { return brackets[i * dim() + j]; }
  Element bracket(const Element& x, const Element& y) const;
  Scalar pair(const Element& x, const Element& y) const;
  Element basis(int i) const { return basis_element(dim(), i); }
  // parity of a homogeneous element; -1 if zero or mixed
  int parity_of(const Element& x) const;
  // twice the grade of a homogeneous element; nullopt if zero or mixed
  std::optional<int> grade2_of(const Element& x) const;
  int index_of(const std::string& label) const;
};

// Checks super-antisymmetry, super-Jacobi and the form axioms.
std::vector<std::string> validate_algebra(const LieSuperalgebra& g);
std::vector<std::string> validate_sl2(const LieSuperalgebra& g, const Sl2Triple& t);
std::vector<std::string> validate_osp(const LieSuperalgebra& g, const OspTriple& t);
// Fills grade2 from ad(H/2); returns violations if some basis vector is not an eigenvector.
std::vector<std::string> compute_grading(LieSuperalgebra& g, const Element& H);

// Subspace selectors by grade (twice-grade thresholds).
std::vector<int> indices_with(const LieSuperalgebra& g, const std::function<bool(int)>& pred);

// Algebra with basis new_basis (given in old coordinates); the triples are transported.
LieSuperalgebra change_basis(const LieSuperalgebra& g, const std::vector<Element>& new_basis,
                             const std::vector<std::string>& new_labels);

Scalar sgn(int p);  // (-1)^p
inline int sgn_int(int p) { return (p & 1) ? -1 : 1; }

}  // namespace walg
