#pragma once

#include "gkz/intmatrix.hpp"

#include <vector>

namespace gkz {

// A homogeneous point configuration: d x n integer matrix with first row
// all ones, distinct columns, full row rank, columns spanning Z^d. The Gale
// dual (an integer kernel basis of A) is computed once and cached.
class Configuration {
 public:
  static Configuration make(const IntMatrix& A);  // throws InvalidConfiguration / RankDeficient
  static Configuration make_from_rows(const std::vector<std::vector<int>>& rows);

  const IntMatrix& matrix() const { return A_; }
  const IntMatrix& gale() const { return B_; }
  int d() const { return A_.rows(); }
  int n() const { return A_.cols(); }
  int m() const { return A_.cols() - A_.rows(); }

  // B row i as integers (length m); the polyhedral constraints live on these.
  std::vector<BigInt> gale_row(int i) const { return B_.row(i); }

  // New configuration with columns permuted: column j of the result is
  // column perm[j] of this one.
  Configuration permuted(const std::vector<int>& perm) const;

 private:
  Configuration(IntMatrix A, IntMatrix B) : A_(std::move(A)), B_(std::move(B)) {}
  IntMatrix A_, B_;
};

}  // namespace gkz
