#include "doctest.h"

#include "gkz/ideal.hpp"

#include "demo_config.hpp"
#include "demo_data.hpp"

#include <algorithm>

using namespace gkz;

namespace {

BinomialIdeal sign_normalized(BinomialIdeal I) {
  TermOrder ord = TermOrder::grevlex(I.nvars);
  for (auto& b : I.binomials)
    if (ord.compare(b.plus, b.minus) < 0) std::swap(b.plus, b.minus);
  I.sort_canonical();
  return I;
}

// every generator must vanish under d_j -> t^(a_j)
bool monomial_map_vanishes(const Configuration& cfg, const BinomialIdeal& I) {
  for (const auto& b : I.binomials) {
    for (int r = 0; r < cfg.d(); ++r) {
      BigInt lhs(0), rhs(0);
      for (int j = 0; j < cfg.n(); ++j) {
        lhs += cfg.matrix().at(r, j) * b.plus[j];
        rhs += cfg.matrix().at(r, j) * b.minus[j];
      }
      if (lhs != rhs) return false;
    }
  }
  return I.monomials.empty();
}

}  // namespace

TEST_CASE("lattice ideal generators from the Gale columns") {
  BinomialIdeal L = lattice_ideal(twisted_cubic());
  REQUIRE(L.binomials.size() == 1);
  Binomial b = L.binomials[0];
  // single column proportional to (1,-2,1)
  bool fwd = b.plus == Monomial({1, 0, 1}) && b.minus == Monomial({0, 2, 0});
  bool bwd = b.plus == Monomial({0, 2, 0}) && b.minus == Monomial({1, 0, 1});
  CHECK((fwd || bwd));

  Configuration square = Configuration::make_from_rows({{1, 1}, {0, 1}});
  CHECK(lattice_ideal(square).empty());

  CHECK(lattice_ideal(demo_config()).binomials.size() == 3);
}

TEST_CASE("toric ideal of the twisted cubic is already saturated") {
  BinomialIdeal I = toric_ideal(twisted_cubic());
  REQUIRE(I.binomials.size() == 1);
  CHECK(I.monomials.empty());
  CHECK(sign_normalized(I).binomials[0] == mk_binomial({0, 2, 0}, {1, 0, 1}));
}

TEST_CASE("toric ideal of a square configuration is zero") {
  Configuration square = Configuration::make_from_rows({{1, 1}, {0, 1}});
  CHECK(toric_ideal(square).empty());
}

TEST_CASE("toric ideal of the demo configuration: the twelve generators") {
  BinomialIdeal I = sign_normalized(toric_ideal(demo_config()));
  BinomialIdeal expect = sign_normalized(demo_toric_expected());
  REQUIRE(I.binomials.size() == 12);
  CHECK(I.monomials.empty());
  CHECK(I == expect);
  CHECK(monomial_map_vanishes(demo_config(), I));
}

TEST_CASE("buchberger leaves a principal ideal alone") {
  BinomialIdeal I(3);
  I.binomials = {mk_binomial({1, 0, 1}, {0, 2, 0})};
  BinomialIdeal G = buchberger(I, TermOrder::grevlex(3));
  CHECK(G.binomials.size() == 1);
  CHECK(all_spairs_reduce_to_zero(G, TermOrder::grevlex(3)));
}

TEST_CASE("buchberger closes membership chains") {
  BinomialIdeal I(3);
  I.binomials = {mk_binomial({1, 0, 0}, {0, 1, 0}), mk_binomial({0, 1, 0}, {0, 0, 1})};
  TermOrder ord = TermOrder::grevlex(3);
  BinomialIdeal G = buchberger(I, ord);
  Element f{Monomial({1, 0, 0}), Monomial({0, 0, 1})};  // d1 - d3
  CHECK(normal_form(f, G, ord).zero);
  CHECK(all_spairs_reduce_to_zero(G, ord));
}

TEST_CASE("normal form examples") {
  TermOrder ord = TermOrder::grevlex(3);
  BinomialIdeal G(3);
  G.binomials = {mk_binomial({0, 2, 0}, {1, 0, 1})};  // d2^2 - d1 d3 with d2^2 leading in grevlex
  CHECK(ord.compare(Monomial({0, 2, 0}), Monomial({1, 0, 1})) > 0);

  // member reduces to zero
  CHECK(normal_form(Element{Monomial({0, 2, 0}), Monomial({1, 0, 1})}, G, ord).zero);

  // d2^2 reduces to d1 d3
  auto nf = normal_form(Element{Monomial({0, 2, 0}), std::nullopt}, G, ord);
  REQUIRE_FALSE(nf.zero);
  CHECK(nf.value.is_monomial());
  CHECK(nf.value.plus == Monomial({1, 0, 1}));

  // a standard monomial is untouched
  auto nf2 = normal_form(Element{Monomial({0, 1, 1}), std::nullopt}, G, ord);
  REQUIRE_FALSE(nf2.zero);
  CHECK(nf2.value.plus == Monomial({0, 1, 1}));
}

TEST_CASE("initial ideal of the twisted cubic under a generic weight") {
  std::vector<Rat> w = {Rat(0), Rat(1), Rat(0)};  // favors d2^2
  BinomialIdeal ini = initial_ideal(twisted_cubic(), w);
  REQUIRE(is_monomial_ideal(ini));
  REQUIRE(ini.monomials.size() == 1);
  CHECK(ini.monomials[0] == Monomial({0, 2, 0}));

  // the other generic cone picks d1 d3
  std::vector<Rat> w2 = {Rat(1), Rat(0), Rat(1)};
  BinomialIdeal ini2 = initial_ideal(twisted_cubic(), w2);
  REQUIRE(is_monomial_ideal(ini2));
  CHECK(ini2.monomials[0] == Monomial({1, 0, 1}));
}

TEST_CASE("demo configuration: initial ideal at -e1 is the expected non-monomial ideal") {
  std::vector<Rat> w(6, Rat(0));
  w[0] = Rat(-1);
  BinomialIdeal ini = initial_ideal(demo_config(), w);
  CHECK_FALSE(is_monomial_ideal(ini));
  CHECK(ideals_equal(ini, demo_initial_e1_expected()));
  CHECK(ini.size() == 12);
}

TEST_CASE("demo configuration: refined weight gives the expected monomial initial ideal") {
  Configuration cfg = demo_config();
  std::vector<Rat> w = default_refined_weight(cfg, 0);
  BinomialIdeal ini = initial_ideal(cfg, w);
  REQUIRE(is_monomial_ideal(ini));
  std::vector<Monomial> got = ini.monomials;
  std::vector<Monomial> expect = demo_in_w_expected();
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("initial ideal is independent of the groebner tiebreak when monomial") {
  Configuration cfg = demo_config();
  std::vector<Rat> w = default_refined_weight(cfg, 0);
  BinomialIdeal IA = toric_ideal(cfg);
  std::vector<int> reversed = {5, 4, 3, 2, 1, 0};
  BinomialIdeal G1 = buchberger(IA, TermOrder::weighted(w));
  BinomialIdeal G2 = buchberger(IA, TermOrder::weighted(w).with_tiebreak(reversed));
  BinomialIdeal i1 = minimal_generators(initial_forms(G1, w));
  BinomialIdeal i2 = minimal_generators(initial_forms(G2, w));
  CHECK(i1 == i2);
}

TEST_CASE("is_monomial examples") {
  BinomialIdeal zero(4);
  CHECK(is_monomial_ideal(zero));
  std::vector<Rat> e1(6, Rat(0));
  e1[0] = Rat(-1);
  CHECK_FALSE(is_monomial_ideal(initial_ideal(demo_config(), e1)));
}

TEST_CASE("minimal generators drop redundancies") {
  BinomialIdeal I(3);
  I.binomials = {mk_binomial({1, 0, 1}, {0, 2, 0}), mk_binomial({2, 0, 2}, {0, 4, 0})};
  BinomialIdeal M = minimal_generators(I);
  REQUIRE(M.binomials.size() == 1);
  CHECK(M.binomials[0] == mk_binomial({1, 0, 1}, {0, 2, 0}));

  BinomialIdeal Z(3);
  CHECK(minimal_generators(Z).empty());
}

TEST_CASE("genericity verdicts") {
  CHECK_FALSE(is_generic(demo_config()));
  CHECK(is_generic(twisted_cubic()));
  Configuration square = Configuration::make_from_rows({{1, 1}, {0, 1}});
  CHECK(is_generic(square));  // vacuous: no generators
}

TEST_CASE("groebner self-check on the demo ideal under the refined order") {
  Configuration cfg = demo_config();
  std::vector<Rat> w = default_refined_weight(cfg, 0);
  TermOrder ord = TermOrder::weighted(w);
  BinomialIdeal G = buchberger(toric_ideal(cfg), ord);
  CHECK(all_spairs_reduce_to_zero(G, ord));
  for (const auto& b : toric_ideal(cfg).binomials)
    CHECK(normal_form(Element{b.plus, b.minus}, G, ord).zero);
}
