#include "gkz/config.hpp"

#include <set>

namespace gkz {

Configuration Configuration::make(const IntMatrix& A) {
  const int d = A.rows(), n = A.cols();
  if (d < 1 || n < d) throw InvalidConfiguration("need d >= 1 and n >= d");
  for (int j = 0; j < n; ++j)
    if (A.at(0, j) != 1) throw InvalidConfiguration("first row must be all ones");
  std::set<std::vector<BigInt>> cols;
  for (int j = 0; j < n; ++j)
    if (!cols.insert(A.column(j)).second) throw InvalidConfiguration("columns must be distinct");
  if (!spans_lattice(A)) {
    if (rank(A) < d) throw RankDeficient("configuration matrix is rank deficient");
    throw InvalidConfiguration("columns do not generate Z^d as a lattice");
  }
  IntMatrix B = integer_kernel_basis(A);
  return Configuration(A, std::move(B));
}

Configuration Configuration::make_from_rows(const std::vector<std::vector<int>>& rows) {
  return make(IntMatrix::from_rows_int(rows));
}

Configuration Configuration::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n()) throw Error("permutation length mismatch");
  IntMatrix P(d(), n());
  for (int j = 0; j < n(); ++j)
    for (int i = 0; i < d(); ++i) P.at(i, j) = A_.at(i, perm[j]);
  return make(P);
}

}  // namespace gkz
