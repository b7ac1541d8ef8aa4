#pragma once

#include "gkz/numeric.hpp"

#include <vector>

namespace gkz {

// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, BigInt(0)) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix from_rows_int(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  std::vector<BigInt> column(int j) const;
  std::vector<BigInt> row(int i) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<BigInt> e_;
};

struct HnfResult {
  IntMatrix H;  // row-style Hermite normal form
  IntMatrix U;  // unimodular, H = U * M
  int rank = 0;
  std::vector<int> pivot_cols;  // one per nonzero row of H
};

// Row-style HNF: pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows last. Canonical for the row lattice of M.
HnfResult hnf(const IntMatrix& M);

int rank(const IntMatrix& M);

BigInt det(const IntMatrix& M);  // square matrices only

// Columns form a Z-basis of ker_Z(A); A must have full row rank, else
// RankDeficient is thrown. The returned n x (n - d) matrix is primitive:
// its columns span the full integer kernel lattice.
IntMatrix integer_kernel_basis(const IntMatrix& A);

// True iff the columns of A generate Z^d as a lattice.
bool spans_lattice(const IntMatrix& A);

// True iff the column lattices of two integer matrices coincide (compared
// via the canonical row HNF of the transposes).
bool same_column_lattice(const IntMatrix& A, const IntMatrix& B);

// gcd of all maximal minors; equals 1 iff the column lattice is saturated.
BigInt maximal_minor_gcd(const IntMatrix& M);

}  // namespace gkz
