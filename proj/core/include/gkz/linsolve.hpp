#pragma once

#include "gkz/numeric.hpp"

#include <vector>

namespace gkz {

enum class SolveKind { Unique, Inconsistent, Underdetermined };

template <typename K>
struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  std::vector<K> solution;   // valid when kind == Unique
  std::vector<K> residuals;  // nonzero right-hand sides of 0 = r rows when Inconsistent
};

// Exact Gaussian elimination over any field type K (Rat, RatFunc). Pivot
// choice is the first nonzero entry, which is all determinism requires.
template <typename K>
SolveResult<K> solve_affine(std::vector<std::vector<K>> M, std::vector<K> b) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
  for (const auto& r : M)
    if (static_cast<int>(r.size()) != cols) throw Error("ragged system matrix");
  if (static_cast<int>(b.size()) != rows) throw Error("rhs length mismatch");

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!(M[i][c] == K(0))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(M[p], M[r]);
    std::swap(b[p], b[r]);
    K inv = K(1) / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
    b[r] = b[r] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      K f = M[i][c];
      if (f == K(0)) continue;
      for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  SolveResult<K> res;
  for (int i = r; i < rows; ++i) {
    if (!(b[i] == K(0))) res.residuals.push_back(b[i]);
  }
  if (!res.residuals.empty()) {
    res.kind = SolveKind::Inconsistent;
    return res;
  }
  if (static_cast<int>(pivot_col.size()) < cols) {
    res.kind = SolveKind::Underdetermined;
    return res;
  }
  res.kind = SolveKind::Unique;
  res.solution.assign(cols, K(0));
  for (int i = 0; i < cols; ++i) res.solution[pivot_col[i]] = b[i];
  return res;
}

}  // namespace gkz
