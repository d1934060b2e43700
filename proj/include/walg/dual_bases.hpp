#pragma once

#include <map>
#include <utility>
#include <vector>

#include "walg/lie.hpp"

namespace walg {

using ChainIndex = std::pair<int, int>;  // (chain j, position n)
using Chain = std::vector<ChainIndex>;

// Chain bases adapted to a nilpotent.  Kind Even uses ad F / ad E (the sl2
// triple); kind Odd uses ad f / ad e (the osp triple).
//   up[j][n]  = (ad F)^n q^j           (resp. (ad f)^n r^j)
//   low[j][n] = C_{j,n} (ad E)^n q_j   (resp. (ad e)^n r_j)
// with (up[i][m] | low[j][n]) = delta_ij delta_mn and low[j][0] spanning the kernel.
struct DualBases {
  enum Kind { Even, Odd } kind = Even;
  std::vector<int> spin2;   // 2 alpha_j, q_j in g(-alpha_j)
  std::vector<int> parity;  // parity of q_j
  std::vector<std::vector<Element>> up;
  std::vector<std::vector<Element>> low;
  std::vector<std::vector<Scalar>> norm;  // C_{j,n}
  std::map<int, std::vector<ChainIndex>> index_sets;  // twice-grade of low[j][n] -> indices

  int nchains() const { return static_cast<int>(up.size()); }
  int length(int j) const { return static_cast<int>(up[j].size()); }
  int grade2(int j, int n) const { return kind == Even ? 2 * n - spin2[j] : n - spin2[j]; }
  int parity_low(int j, int n) const { return kind == Even ? parity[j] : (parity[j] + n) & 1; }
  const Element* low_at(int j, int n) const { return n < length(j) ? &low[j][n] : nullptr; }
  // coordinate of x on low[j][n]
  Scalar coord(const LieSuperalgebra& g, const Element& x, int j, int n) const { return g.pair(up[j][n], x); }
  // projection onto the kernel along the image of ad E (resp. ad e)
  Element sharp(const LieSuperalgebra& g, const Element& x) const;
  // minimal gap between consecutive chain members, in twice-grade units
  int gap2() const { return kind == Even ? 2 : 1; }
};

DualBases build_dual_bases(const LieSuperalgebra& g, DualBases::Kind kind);
// pairing, termination and spanning checks
std::vector<std::string> verify_dual_bases(const LieSuperalgebra& g, const DualBases& b);
// normalisation constants written in closed form
Scalar closed_norm(const DualBases& b, int j, int n);

// a ≺ b for chain members (by grade); boundaries are integers/half-integers in twice-grade units
bool precedes(const DualBases& b, ChainIndex x, ChainIndex y);
bool bound_precedes(const DualBases& b, int k2, ChainIndex x);
bool precedes_bound(const DualBases& b, ChainIndex x, int k2);

// All nonempty chains lo ≺ c_0 ≺ ... ≺ c_p ≺ hi.
std::vector<Chain> enumerate_chains(const DualBases& b, int lo2, int hi2);

using Tensor = Matrix;  // dim x dim, entry (a,b) = coefficient of e_a ⊗ e_b
Tensor tensor_zero(int dim);
void tensor_add(Tensor& t, const Scalar& s, const Element& x, const Element& y);

// Chain tensor identities for every t; returns failures.
std::vector<std::string> check_tensor_identity(const LieSuperalgebra& g, const DualBases& b);

}  // namespace walg
