#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/scalar.hpp"

namespace walg {

using Matrix = std::vector<std::vector<Scalar>>;

// Row reduction accepting only constant pivots; a column whose nonzero
// entries are all k- or c-dependent raises KDivisionError.
struct RowEchelon {
  Matrix rows;                // reduced rows
  std::vector<int> pivots;    // pivot column per row
};

RowEchelon row_reduce(Matrix m, int ncols);
int rank(const Matrix& m, int ncols);
// basis of {x : m x = 0}
std::vector<std::vector<Scalar>> kernel(const Matrix& m, int ncols);
std::optional<Matrix> inverse(const Matrix& m);

// Sparse linear system sum_t a[e][t] x_t = rhs[e].
struct SparseSystem {
  int nvars = 0;
  std::vector<std::map<int, Scalar>> rows;
  std::vector<Scalar> rhs;
  void add_equation(std::map<int, Scalar> row, Scalar b);
};

struct SolveResult {
  enum Status { Unique, Inconsistent, Underdetermined } status = Unique;
  std::vector<Scalar> x;
  std::vector<int> free_vars;
};

SolveResult solve(const SparseSystem& sys);

}  // namespace walg
