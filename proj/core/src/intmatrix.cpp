#include "gkz/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error("ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows_int(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<BigInt>> big;
  big.reserve(rows.size());
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return from_rows(big);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

std::vector<BigInt> IntMatrix::column(int j) const {
  std::vector<BigInt> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<BigInt> IntMatrix::row(int i) const {
  std::vector<BigInt> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const BigInt& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

HnfResult hnf(const IntMatrix& M) {
  HnfResult res{M, IntMatrix::identity(M.rows()), 0, {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  const int m = M.rows(), n = M.cols();
  int r = 0;
  auto swap_rows = [&](IntMatrix& X, int a, int b) {
    for (int j = 0; j < X.cols(); ++j) std::swap(X.at(a, j), X.at(b, j));
  };
  auto addmul_row = [&](IntMatrix& X, int dst, int src, const BigInt& f) {
    for (int j = 0; j < X.cols(); ++j) X.at(dst, j) += f * X.at(src, j);
  };
  auto negate_row = [&](IntMatrix& X, int i) {
    for (int j = 0; j < X.cols(); ++j) X.at(i, j) = -X.at(i, j);
  };
  for (int c = 0; c < n && r < m; ++c) {
    // gcd-style elimination below row r in column c
    while (true) {
      int piv = -1;
      BigInt best;
      for (int i = r; i < m; ++i) {
        BigInt v = H.at(i, c) < 0 ? BigInt(-H.at(i, c)) : H.at(i, c);
        if (v != 0 && (piv < 0 || v < best)) {
          piv = i;
          best = v;
        }
      }
      if (piv < 0) break;
      if (piv != r) {
        swap_rows(H, piv, r);
        swap_rows(U, piv, r);
      }
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (H.at(i, c) == 0) continue;
        BigInt q = H.at(i, c) / H.at(r, c);  // truncated division keeps remainders small
        if (q != 0) {
          addmul_row(H, i, r, -q);
          addmul_row(U, i, r, -q);
        }
        if (H.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      BigInt q = H.at(i, c) / H.at(r, c);
      if (H.at(i, c) - q * H.at(r, c) < 0) --q;  // floor
      if (q != 0) {
        addmul_row(H, i, r, -q);
        addmul_row(U, i, r, -q);
      }
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const IntMatrix& M) { return hnf(M).rank; }

BigInt det(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error("determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  const int n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        A.at(i, j) = (A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j)) / prev;
      }
      A.at(i, k) = 0;
    }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : BigInt(-A.at(n - 1, n - 1));
}

IntMatrix integer_kernel_basis(const IntMatrix& A) {
  const int d = A.rows(), n = A.cols();
  HnfResult h = hnf(A.transpose());  // rows of U indexing zero rows of H span ker(A)
  if (h.rank < d) throw RankDeficient("matrix does not have full row rank");
  const int m = n - h.rank;
  IntMatrix B(n, m);
  for (int k = 0; k < m; ++k) {
    const int urow = h.rank + k;
    for (int j = 0; j < n; ++j) B.at(j, k) = h.U.at(urow, j);
  }
  return B;
}

bool spans_lattice(const IntMatrix& A) {
  HnfResult h = hnf(A.transpose());
  if (h.rank < A.rows()) return false;
  for (int i = 0; i < h.rank; ++i) {
    if (h.H.at(i, h.pivot_cols[i]) != 1) return false;
  }
  return true;
}

bool same_column_lattice(const IntMatrix& A, const IntMatrix& B) {
  HnfResult ha = hnf(A.transpose()), hb = hnf(B.transpose());
  if (ha.rank != hb.rank) return false;
  for (int i = 0; i < ha.rank; ++i)
    for (int j = 0; j < ha.H.cols(); ++j)
      if (ha.H.at(i, j) != hb.H.at(i, j)) return false;
  return true;
}

BigInt maximal_minor_gcd(const IntMatrix& M) {
  const int m = std::min(M.rows(), M.cols());
  const bool wide = M.cols() >= M.rows();
  const int total = wide ? M.cols() : M.rows();
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  BigInt g(0);
  while (true) {
    IntMatrix S(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) S.at(i, j) = wide ? M.at(i, idx[j]) : M.at(idx[i], j);
    BigInt dv = det(S);
    if (dv < 0) dv = -dv;
    g = boost::multiprecision::gcd(g, dv);
    if (g == 1) return g;
    int k = m - 1;
    while (k >= 0 && idx[k] == total - m + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

}  // namespace gkz
