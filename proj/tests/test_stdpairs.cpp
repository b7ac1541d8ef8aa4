#include "doctest.h"

#include "gkz/stdpairs.hpp"

#include "demo_config.hpp"
#include "demo_data.hpp"

#include <algorithm>

using namespace gkz;

namespace {

MonomialIdeal demo_inw() {
  return MonomialIdeal::from_generators(6, demo_in_w_expected());
}

}  // namespace

TEST_CASE("standard pairs of a single variable ideal") {
  MonomialIdeal M = MonomialIdeal::from_generators(2, {Monomial({1, 0})});
  auto pairs = standard_pairs(M);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == StandardPair{Monomial({0, 0}), {1}});
}

TEST_CASE("standard pairs of the axis-pair ideal") {
  MonomialIdeal M = MonomialIdeal::from_generators(2, {Monomial({1, 1})});
  auto pairs = standard_pairs(M);
  std::vector<StandardPair> expect = {StandardPair{Monomial({0, 0}), {0}}, StandardPair{Monomial({0, 0}), {1}}};
  std::sort(expect.begin(), expect.end());
  CHECK(pairs == expect);
  CHECK(pairs == brute_force_standard_pairs(M, 5));
}

TEST_CASE("the demo initial ideal has exactly the fourteen tabulated pairs") {
  auto pairs = standard_pairs(demo_inw());
  CHECK(pairs == demo_pairs_expected());
  CHECK(degree(demo_inw(), 3) == 8);
  StandardPair embedded{Monomial({0, 0, 0, 1, 0, 0}), {0, 5}};
  CHECK(classify_pair(embedded, 6, 3) == PairClass::Embedded);
  int top = 0, emb = 0;
  for (const auto& p : pairs)
    (classify_pair(p, 6, 3) == PairClass::TopDimensional ? top : emb)++;
  CHECK(top == 8);
  CHECK(emb == 6);
}

TEST_CASE("brute force oracle agrees on the demo initial ideal") {
  CHECK(brute_force_standard_pairs(demo_inw(), 6) == demo_pairs_expected());
}

TEST_CASE("brute force box preconditions") {
  MonomialIdeal M = MonomialIdeal::from_generators(1, {Monomial(std::vector<int>{2})});
  auto pairs = brute_force_standard_pairs(M, 5);
  std::vector<StandardPair> expect = {StandardPair{Monomial(std::vector<int>{0}), {}}, StandardPair{Monomial(std::vector<int>{1}), {}}};
  std::sort(expect.begin(), expect.end());
  CHECK(pairs == expect);
  CHECK_THROWS_AS(brute_force_standard_pairs(M, 1), BoxTooSmall);
}

TEST_CASE("associated primes") {
  MonomialIdeal M = MonomialIdeal::from_generators(2, {Monomial({1, 1})});
  std::set<std::vector<int>> expect = {{0}, {1}};
  CHECK(associated_primes(M) == expect);

  auto faces = associated_primes(demo_inw());
  CHECK(faces.count({1, 2, 3, 4}) == 1);  // complement of {1,6}

  MonomialIdeal P = MonomialIdeal::from_generators(1, {Monomial(std::vector<int>{2})});
  std::set<std::vector<int>> single = {{0}};
  CHECK(associated_primes(P) == single);
}

TEST_CASE("degree of the zero ideal is one") {
  MonomialIdeal Z;
  Z.nvars = 3;
  CHECK(degree(Z, 0) == 1);
  auto pairs = standard_pairs(Z);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].sigma == std::vector<int>{0, 1, 2});
}

TEST_CASE("chain property") {
  CHECK(check_chain_property(demo_inw()));
  MonomialIdeal simple = MonomialIdeal::from_generators(2, {Monomial({1, 1})});
  CHECK(check_chain_property(simple));  // vacuous
  // x^2, xy, xz: associated faces {x} and {x,y,z}, no face between them
  MonomialIdeal gap =
      MonomialIdeal::from_generators(3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({1, 0, 1})});
  CHECK_FALSE(check_chain_property(gap));
}

TEST_CASE("polyhedral oracle on demo pairs") {
  Configuration cfg = demo_config();
  std::vector<Rat> w = default_refined_weight(cfg, 0);

  StandardPair good{Monomial({0, 0, 0, 1, 0, 0}), {0, 5}};
  CHECK(is_standard_pair_polyhedral(cfg, w, good, 50) == OracleVerdict::Yes);

  // replacing eta by d4^2 leaves the fourteen-pair table, and the oracle agrees
  StandardPair bad{Monomial({0, 0, 0, 2, 0, 0}), {0, 5}};
  auto table = demo_pairs_expected();
  CHECK(std::find(table.begin(), table.end(), bad) == table.end());
  CHECK(is_standard_pair_polyhedral(cfg, w, bad, 50) == OracleVerdict::No);

  StandardPair malformed{Monomial({0, 0, 0, 1, 0, 1}), {0, 5}};
  CHECK_THROWS_AS(is_standard_pair_polyhedral(cfg, w, malformed, 50), Error);
}

TEST_CASE("polyhedral oracle validates the whole demo table") {
  Configuration cfg = demo_config();
  std::vector<Rat> w = default_refined_weight(cfg, 0);
  for (const auto& p : demo_pairs_expected())
    CHECK(is_standard_pair_polyhedral(cfg, w, p, 50) == OracleVerdict::Yes);
}
