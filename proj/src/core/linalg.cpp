#include "walg/linalg.hpp"

#include <algorithm>

namespace walg {

RowEchelon row_reduce(Matrix m, int ncols) {
  RowEchelon out;
  size_t r = 0;
  for (int col = 0; col < ncols && r < m.size(); ++col) {
    size_t piv = m.size();
    bool symbolic = false;
    for (size_t i = r; i < m.size(); ++i) {
      const Scalar& v = m[i][col];
      if (v.is_zero()) continue;
      if (v.is_constant()) {
        piv = i;
        break;
      }
      symbolic = true;
    }
    if (piv == m.size()) {
      if (symbolic) throw KDivisionError("elimination requires a parameter-dependent pivot");
      continue;
    }
    std::swap(m[r], m[piv]);
    Scalar inv = m[r][col].inverse();
    for (int c = col; c < ncols; ++c) m[r][c] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Scalar f = m[i][col];
      for (int c = col; c < ncols; ++c)
        if (!m[r][c].is_zero()) m[i][c] -= f * m[r][c];
    }
    out.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const Matrix& m, int ncols) { return static_cast<int>(row_reduce(m, ncols).pivots.size()); }

std::vector<std::vector<Scalar>> kernel(const Matrix& m, int ncols) {
  RowEchelon re = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : re.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols);
    v[f] = Scalar(1);
    for (size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  int n = static_cast<int>(m.size());
  Matrix aug(n, std::vector<Scalar>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar(1);
  }
  RowEchelon re = row_reduce(aug, 2 * n);
  if (static_cast<int>(re.pivots.size()) < n || re.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = re.rows[i][n + j];
  return inv;
}

void SparseSystem::add_equation(std::map<int, Scalar> row, Scalar b) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero())
      it = row.erase(it);
    else
      ++it;
  }
  if (row.empty() && b.is_zero()) return;
  rows.push_back(std::move(row));
  rhs.push_back(std::move(b));
}

SolveResult solve(const SparseSystem& sys) {
  // Gauss-Jordan on sparse rows; pivot chosen among constant entries.
  std::vector<std::map<int, Scalar>> rows = sys.rows;
  std::vector<Scalar> rhs = sys.rhs;
  std::vector<int> pivot_of_row(rows.size(), -1);
  std::vector<int> row_of_var(sys.nvars, -1);
  SolveResult res;
  std::vector<bool> done(rows.size(), false);
  for (;;) {
    // pick an unprocessed row with a constant entry, shortest first
    size_t best = rows.size();
    int bestvar = -1;
    size_t bestlen = 0;
    bool symbolic_only = false;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].empty()) continue;
      int var = -1;
      for (auto& [v, a] : rows[r])
        if (a.is_constant()) {
          var = v;
          break;
        }
      if (var < 0) {
        symbolic_only = true;
        continue;
      }
      if (best == rows.size() || rows[r].size() < bestlen) {
        best = r;
        bestvar = var;
        bestlen = rows[r].size();
      }
    }
    if (best == rows.size()) {
      if (symbolic_only) throw KDivisionError("linear solve requires a parameter-dependent pivot");
      break;
    }
    done[best] = true;
    pivot_of_row[best] = bestvar;
    row_of_var[bestvar] = static_cast<int>(best);
    Scalar inv = rows[best][bestvar].inverse();
    if (!inv.is_one()) {
      for (auto& [v, a] : rows[best]) a *= inv;
      rhs[best] *= inv;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      auto it = rows[r].find(bestvar);
      if (it == rows[r].end()) continue;
      Scalar f = it->second;
      for (auto& [v, a] : rows[best]) {
        Scalar& dst = rows[r][v];
        dst -= f * a;
        if (dst.is_zero()) rows[r].erase(v);
      }
      rhs[r] -= f * rhs[best];
    }
  }
  for (size_t r = 0; r < rows.size(); ++r)
    if (rows[r].empty() && !rhs[r].is_zero()) {
      res.status = SolveResult::Inconsistent;
      return res;
    }
  res.x.assign(sys.nvars, Scalar());
  for (int v = 0; v < sys.nvars; ++v) {
    if (row_of_var[v] < 0) {
      res.free_vars.push_back(v);
      continue;
    }
  }
  for (int v = 0; v < sys.nvars; ++v) {
    int r = row_of_var[v];
    if (r < 0) continue;
    res.x[v] = rhs[r];  // free variables set to zero
  }
  res.status = res.free_vars.empty() ? SolveResult::Unique : SolveResult::Underdetermined;
  return res;
}

}  // namespace walg
