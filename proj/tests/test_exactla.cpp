#include "doctest.h"

#include "gkz/intmatrix.hpp"
#include "gkz/linsolve.hpp"
#include "gkz/ratfunc.hpp"

#include "demo_config.hpp"

#include <random>

using namespace gkz;

namespace {

bool is_row_hnf(const IntMatrix& H) {
  int last_pivot = -1;
  bool seen_zero_row = false;
  for (int i = 0; i < H.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < H.cols(); ++j)
      if (H.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (p <= last_pivot) return false;
    if (H.at(i, p) <= 0) return false;
    for (int k = 0; k < i; ++k)
      if (H.at(k, p) < 0 || H.at(k, p) >= H.at(i, p)) return false;
    last_pivot = p;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int mag) {
  std::uniform_int_distribution<int> dist(-mag, mag);
  IntMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M.at(i, j) = dist(rng);
  return M;
}

}  // namespace

TEST_CASE("hnf on a 2x2 example") {
  IntMatrix M = IntMatrix::from_rows_int({{2, 4}, {1, 3}});
  auto h = hnf(M);
  CHECK(h.U * M == h.H);
  BigInt du = det(h.U);
  CHECK((du == 1 || du == -1));
  CHECK(is_row_hnf(h.H));
  CHECK(h.rank == 2);
}

TEST_CASE("hnf fixes the identity and the zero matrix") {
  IntMatrix I2 = IntMatrix::identity(2);
  auto h = hnf(I2);
  CHECK(h.H == I2);
  CHECK(h.U == I2);

  IntMatrix Z = IntMatrix::from_rows_int({{0, 0}});
  auto hz = hnf(Z);
  CHECK(hz.H == Z);
  CHECK(hz.rank == 0);
}

TEST_CASE("hnf randomized unimodularity") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    IntMatrix M = random_matrix(rng, r, c, 6);
    auto h = hnf(M);
    CHECK(h.U * M == h.H);
    BigInt du = det(h.U);
    CHECK((du == 1 || du == -1));
    CHECK(is_row_hnf(h.H));
  }
}

TEST_CASE("integer kernel basis of the twisted cubic matrix") {
  IntMatrix A = IntMatrix::from_rows_int({{1, 1, 1}, {0, 1, 2}});
  IntMatrix B = integer_kernel_basis(A);
  REQUIRE(B.rows() == 3);
  REQUIRE(B.cols() == 1);
  CHECK((A * B).is_zero());

  // brute-force primitive kernel vectors with entries in [-3, 3]
  std::vector<std::vector<int>> primitive;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        if (a + b + c != 0 || b + 2 * c != 0) continue;
        if (a == 0 && b == 0 && c == 0) continue;
        int g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
        if (g == 1) primitive.push_back({a, b, c});
      }
  // exactly (1,-2,1) up to sign inside that window
  REQUIRE(primitive.size() == 2);
  bool matches = (B.at(0, 0) == primitive[0][0] && B.at(1, 0) == primitive[0][1] && B.at(2, 0) == primitive[0][2]) ||
                 (B.at(0, 0) == primitive[1][0] && B.at(1, 0) == primitive[1][1] && B.at(2, 0) == primitive[1][2]);
  CHECK(matches);
}

TEST_CASE("integer kernel basis: square case is empty") {
  IntMatrix A = IntMatrix::from_rows_int({{1, 1}, {0, 1}});
  IntMatrix B = integer_kernel_basis(A);
  CHECK(B.rows() == 2);
  CHECK(B.cols() == 0);
}

TEST_CASE("integer kernel basis rejects rank-deficient input") {
  IntMatrix A = IntMatrix::from_rows_int({{1, 1}, {2, 2}});
  CHECK_THROWS_AS(integer_kernel_basis(A), RankDeficient);
}

TEST_CASE("demo configuration kernel spans the expected lattice") {
  Configuration cfg = demo_config();
  const IntMatrix& B = cfg.gale();
  REQUIRE(B.rows() == 6);
  REQUIRE(B.cols() == 3);
  CHECK((cfg.matrix() * B).is_zero());
  CHECK(maximal_minor_gcd(B) == 1);

  IntMatrix candidate(6, 3);
  const int cand[6][3] = {{0, 1, 3}, {0, 1, 0}, {1, 0, 0}, {1, 0, -3}, {-1, -1, 1}, {-1, -1, -1}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j) candidate.at(i, j) = cand[i][j];
  CHECK((cfg.matrix() * candidate).is_zero());
  CHECK(same_column_lattice(B, candidate));
}

TEST_CASE("kernel basis primitivity on random configurations") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 40) {
    int d = 2 + static_cast<int>(rng() % 2);
    int n = d + 1 + static_cast<int>(rng() % 3);
    IntMatrix A(d, n);
    for (int j = 0; j < n; ++j) {
      A.at(0, j) = 1;
      for (int i = 1; i < d; ++i) A.at(i, j) = static_cast<int>(rng() % 4);
    }
    if (rank(A) < d) continue;
    IntMatrix B = integer_kernel_basis(A);
    CHECK((A * B).is_zero());
    if (B.cols() > 0) CHECK(maximal_minor_gcd(B) == 1);
    ++done;
  }
}

TEST_CASE("spans_lattice") {
  CHECK(spans_lattice(demo_config().matrix()));
  CHECK(spans_lattice(IntMatrix::from_rows_int({{1, 1, 1}, {0, 1, 2}})));
  CHECK_FALSE(spans_lattice(IntMatrix::from_rows_int({{1, 1}, {0, 2}})));
}

TEST_CASE("rational function canonical arithmetic") {
  RatFunc a = RatFunc::alpha();
  RatFunc f = (a + RatFunc(1)) / (a - RatFunc(2));
  RatFunc g = RatFunc::poly({Rat(1), Rat(0), Rat(3)});  // 3a^2 + 1
  CHECK((f + g) - g == f);
  CHECK(f * (RatFunc(1) / f) == RatFunc(1));
  // canonical form collapses common factors
  RatFunc h = ((a + 1) * (a + 1)) / (a + 1);
  CHECK(h == a + 1);
  CHECK(h.is_polynomial());
  CHECK((a - a).is_zero());
  CHECK(RatFunc(Rat(-3)).is_negative_integer_constant());
  CHECK_FALSE((a - 1).is_integer_constant());
}

TEST_CASE("rational function randomized field identities") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto rand_poly = [&](int maxdeg) {
    std::vector<Rat> cs(1 + rng() % (maxdeg + 1));
    for (auto& c : cs) c = Rat(coeff(rng));
    return RatFunc::poly(cs);
  };
  for (int i = 0; i < 80; ++i) {
    RatFunc f = rand_poly(3), g = rand_poly(3), h = rand_poly(2);
    CHECK((f + g) - g == f);
    CHECK(f * (g + h) == f * g + f * h);
    if (!g.is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("rational roots of numerators") {
  RatFunc a = RatFunc::alpha();
  auto roots = rational_roots(a * 3 - RatFunc(2));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == Rat(2) / Rat(3));
  auto rq = rational_roots((a - 1) * (a + 2));
  REQUIRE(rq.size() == 2);
  CHECK(((rq[0] == Rat(1) && rq[1] == Rat(-2)) || (rq[0] == Rat(-2) && rq[1] == Rat(1))));
  CHECK(rational_roots(a * a + 1).empty());
}

TEST_CASE("solve_affine classification") {
  using VR = std::vector<Rat>;
  auto id = solve_affine<Rat>({VR{Rat(1), Rat(0)}, VR{Rat(0), Rat(1)}}, VR{Rat(5), Rat(-7)});
  REQUIRE(id.kind == SolveKind::Unique);
  CHECK(id.solution == VR{Rat(5), Rat(-7)});

  auto bad = solve_affine<Rat>({VR{Rat(0)}}, VR{Rat(1)});
  CHECK(bad.kind == SolveKind::Inconsistent);

  auto under = solve_affine<Rat>({VR{Rat(1), Rat(1)}}, VR{Rat(3)});
  CHECK(under.kind == SolveKind::Underdetermined);
}

TEST_CASE("solve_affine over Q(alpha) reconstructs an embedded-pair exponent") {
  Configuration cfg = demo_config();
  const IntMatrix& A = cfg.matrix();
  RatFunc a = RatFunc::alpha();
  // beta = (1+a, 2, a); fixed coordinates 2..5 at (0,0,1,0); unknowns 1 and 6
  RFVec beta = {a + 1, RatFunc(2), a};
  std::vector<int> free_cols = {0, 5};
  std::vector<int> eta = {0, 0, 0, 1, 0, 0};
  std::vector<std::vector<RatFunc>> M(3, std::vector<RatFunc>(2, RatFunc(0)));
  std::vector<RatFunc> rhs(3, RatFunc(0));
  for (int r = 0; r < 3; ++r) {
    rhs[r] = beta[r];
    for (int j = 0; j < 6; ++j)
      if (j != 0 && j != 5) rhs[r] -= RatFunc(Rat(A.at(r, j) * eta[j]));
    for (int c = 0; c < 2; ++c) M[r][c] = RatFunc(Rat(A.at(r, free_cols[c])));
  }
  auto sol = solve_affine<RatFunc>(M, rhs);
  REQUIRE(sol.kind == SolveKind::Unique);
  CHECK(sol.solution[0] == RatFunc(0));  // first coordinate
  CHECK(sol.solution[1] == a);           // last coordinate
}

TEST_CASE("solve_affine exactness property") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int iter = 0; iter < 60; ++iter) {
    int nr = 1 + static_cast<int>(rng() % 4), nc = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<Rat>> M(nr, std::vector<Rat>(nc));
    std::vector<Rat> b(nr);
    for (auto& row : M)
      for (auto& x : row) x = Rat(dist(rng));
    for (auto& x : b) x = Rat(dist(rng));
    auto sol = solve_affine<Rat>(M, b);
    if (sol.kind == SolveKind::Unique) {
      for (int r = 0; r < nr; ++r) {
        Rat acc(0);
        for (int c = 0; c < nc; ++c) acc += M[r][c] * sol.solution[c];
        CHECK(acc == b[r]);
      }
    }
  }
}
