#include "doctest.h"

#include "gkz/hypergeo.hpp"

#include "demo_config.hpp"
#include "demo_data.hpp"

#include <algorithm>

using namespace gkz;

namespace {

RatFunc a() { return RatFunc::alpha(); }
RatFunc c(int num, int den = 1) { return RatFunc(Rat(num) / Rat(den)); }

bool vec_less(const RFVec& x, const RFVec& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

std::vector<RFVec> sorted(std::vector<RFVec> v) {
  std::sort(v.begin(), v.end(), vec_less);
  return v;
}

std::vector<RFVec> exponent_vectors(const std::vector<FakeExponent>& fes) {
  std::vector<RFVec> v;
  for (const auto& fe : fes) v.push_back(fe.v);
  return sorted(v);
}

// the nine expected fake exponents of the demo system at beta' = (1+a, 2, a)
std::vector<RFVec> demo_fake_exponents_expected() {
  return sorted({
      {a() / 2 + c(1, 2), c(2) - a(), a() * 3 / 2 - c(5, 2), c(0), c(0), c(1)},
      {a() * 3, c(0), c(0), c(1) - a() * 3, a(), c(0)},
      {a() / 2 + c(1), c(1) - a(), a() * 3 / 2 - c(1), c(0), c(0), c(0)},
      {c(0), c(0), c(0), c(1), c(0), a()},
      {c(3, 2), c(0), c(1, 2), c(0), c(0), a() - c(1)},
      {c(1), c(1), c(-1), c(0), c(0), a()},
      {a() + c(2, 3), a() - c(1, 3), c(0), c(0), c(2, 3) - a(), c(0)},
      {a() + c(1, 3), a() - c(5, 3), c(1), c(0), c(4, 3) - a(), c(0)},
      {a(), a() - c(3), c(2), c(0), c(2) - a(), c(0)},
  });
}

RFVec demo_beta_prime() { return {a() + c(1), c(2), a()}; }

std::vector<Rat> demo_weight() { return default_refined_weight(demo_config(), 0); }

}  // namespace

TEST_CASE("negative support classification") {
  RFVec v1 = {c(-1), c(1, 2), c(-3)};
  CHECK(negative_support(v1) == std::vector<int>{0, 2});
  RFVec v2 = {c(0), c(0), c(0), c(1), c(0), a()};
  CHECK(negative_support(v2).empty());
  RFVec v3 = {c(-1), c(0), c(0), c(1), c(0), a()};
  CHECK(negative_support(v3) == std::vector<int>{0});
}

TEST_CASE("fake exponents of the demo system match the nine-vector table") {
  FakeExponentResult F = fake_exponents(demo_config(), demo_beta_prime(), demo_weight(), 50);
  REQUIRE(F.exponents.size() == 9);
  CHECK(exponent_vectors(F.exponents) == demo_fake_exponents_expected());

  // embedded pairs other than (d4,{1,6}) become consistent only at these values
  std::vector<Rat> degen = {Rat(2) / 3, Rat(1), Rat(2)};
  CHECK(F.consistency_degenerations == degen);
}

TEST_CASE("fake exponent sources and trivial eta case") {
  // beta = A eta for eta = e4 + e6, no alpha: eta itself must appear
  Configuration cfg = demo_config();
  RFVec eta = {c(0), c(0), c(0), c(1), c(0), c(1)};
  RFVec beta = apply_matrix(cfg.matrix(), eta);
  FakeExponentResult F = fake_exponents(cfg, beta, demo_weight(), 50);
  bool found = false;
  for (const auto& fe : F.exponents)
    if (fe.v == eta) found = true;
  CHECK(found);
}

TEST_CASE("twisted cubic fake exponents at beta = (1,0)") {
  Configuration cfg = twisted_cubic();
  std::vector<Rat> w = {Rat(0), Rat(1), Rat(0)};  // in = <d2^2>
  FakeExponentResult F = fake_exponents(cfg, {c(1), c(0)}, w, 50);
  std::vector<RFVec> expect = sorted({{c(1), c(0), c(0)}, {c(1, 2), c(1), c(-1, 2)}});
  CHECK(exponent_vectors(F.exponents) == expect);
}

TEST_CASE("minimal negative support checks") {
  Configuration cfg = demo_config();
  RFVec kernel = {c(0), c(0), c(0), c(1), c(0), a()};
  CHECK(has_minimal_negative_support(cfg, kernel, 50) == TriState::Yes);
  RFVec witness = {c(-1), c(0), c(0), c(1), c(0), a()};
  CHECK(has_minimal_negative_support(cfg, witness, 50) == TriState::Yes);
  RFVec w2 = {c(0), c(1), c(-1), c(0), c(0), a()};
  CHECK(has_minimal_negative_support(cfg, w2, 50) == TriState::Yes);
  // (1,1,-1,0,0,a) translates to the kernel exponent: not minimal
  RFVec not_min = {c(1), c(1), c(-1), c(0), c(0), a()};
  CHECK(has_minimal_negative_support(cfg, not_min, 50) == TriState::No);

  Configuration tc = twisted_cubic();
  RFVec bad = {c(-1), c(2), c(0)};
  CHECK(has_minimal_negative_support(tc, bad, 50) == TriState::No);
}

TEST_CASE("canonical series of the twisted cubic quadratic") {
  Configuration cfg = twisted_cubic();
  RFVec v = {c(0), c(2), c(0)};
  TruncatedSeries s = canonical_series(cfg, v, 6);
  REQUIRE(s.terms.size() == 2);
  // x2^2 + 2 x1 x3
  const SeriesTerm* base = nullptr;
  const SeriesTerm* other = nullptr;
  for (const auto& t : s.terms)
    (t.z == std::vector<BigInt>{BigInt(0)} ? base : other) = &t;
  REQUIRE(base != nullptr);
  REQUIRE(other != nullptr);
  CHECK(base->coeff == RatFunc(1));
  CHECK(other->coeff == c(2));
  RFVec expect_exp = {c(1), c(0), c(1)};
  CHECK(other->exponent == expect_exp);
  CHECK(series_to_string(s) == "x2^2 + 2 x1 x3");
  CHECK(verify_solution(cfg, {c(2), c(2)}, s));
}

TEST_CASE("demo kernel exponent gives a one-term series at every radius") {
  Configuration cfg = demo_config();
  RFVec v = {c(0), c(0), c(0), c(1), c(0), a()};
  CHECK(certify_single_term(cfg, v, 50) == TriState::Yes);
  for (long radius : {1L, 3L, 6L}) {
    TruncatedSeries s = canonical_series(cfg, v, radius);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].coeff == RatFunc(1));
  }
  TruncatedSeries s = canonical_series(cfg, v, 6);
  CHECK(series_to_string(s) == "x4 x6^a");
  CHECK(verify_solution(cfg, demo_beta_prime(), s));
}

TEST_CASE("verify_solution rejects corrupted series") {
  Configuration cfg = twisted_cubic();
  TruncatedSeries s = canonical_series(cfg, {c(0), c(2), c(0)}, 6);
  REQUIRE(verify_solution(cfg, {c(2), c(2)}, s));
  for (auto& t : s.terms)
    if (t.coeff == c(2)) t.coeff = c(3);
  CHECK_FALSE(verify_solution(cfg, {c(2), c(2)}, s));
}

TEST_CASE("embedded pair selection on the demo configuration") {
  auto sel = select_embedded_pair(demo_config(), 50);
  REQUIRE(sel.has_value());
  CHECK(sel->pivot == 0);
  CHECK(sel->perm == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(sel->refined);
  StandardPair expect{Monomial({0, 0, 0, 1, 0, 0}), {0, 5}};
  CHECK(sel->pair == expect);
  CHECK(sel->tau == std::vector<int>{5});
  CHECK_FALSE(is_monomial_ideal(sel->initial_e1));
}

TEST_CASE("no embedded pair for cohen-macaulay configurations") {
  CHECK_FALSE(select_embedded_pair(twisted_cubic(), 50).has_value());
  Configuration square = Configuration::make_from_rows({{1, 1}, {0, 1}});
  CHECK_FALSE(select_embedded_pair(square, 50).has_value());
}

TEST_CASE("alpha sampling keeps the single tau slot symbolic and reports exclusions") {
  auto sel = select_embedded_pair(demo_config(), 50);
  REQUIRE(sel.has_value());
  AlphaAssignment as = sample_alpha(*sel, 0, 50);
  CHECK(as.symbolic_slot == 5);
  CHECK(as.fixed.empty());
  CHECK(as.alpha[5] == a());
  std::vector<Rat> degen = {Rat(2) / 3, Rat(1), Rat(2)};
  CHECK(as.excluded_consistency == degen);
  std::vector<Rat> zf = {Rat(-2), Rat(-1), Rat(-2) / 3, Rat(-1) / 3, Rat(0)};
  CHECK(as.excluded_zero_first == zf);
}

TEST_CASE("kernel of the derivative map on the demo system") {
  Configuration cfg = demo_config();
  KernelResult K = kernel_K(cfg, demo_beta_prime(), demo_weight(), 50);
  REQUIRE(K.K.size() == 1);
  RFVec expect = {c(0), c(0), c(0), c(1), c(0), a()};
  CHECK(K.K[0].v == expect);
  CHECK(K.K[0].minimal == TriState::Yes);
  CHECK_FALSE(K.inconclusive);

  // a rational instance away from the construction has no kernel exponent
  KernelResult K2 = kernel_K(cfg, {c(2), c(2), c(0)}, demo_weight(), 50);
  CHECK(K2.K.empty());
}

TEST_CASE("cokernel witnesses on the demo system") {
  Configuration cfg = demo_config();
  auto sel = select_embedded_pair(cfg, 50);
  REQUIRE(sel.has_value());
  AlphaAssignment as = sample_alpha(*sel, 0, 50);
  RFVec beta = {a(), c(1), a()};
  KernelResult K = kernel_K(sel->cfg, demo_beta_prime(), sel->weight, 50);
  WitnessResult W = cokernel_witnesses(*sel, as, K.K, beta, 50);
  REQUIRE(W.witnesses.size() == 2);
  std::vector<RFVec> expect = sorted({{c(-1), c(0), c(0), c(1), c(0), a()}, {c(0), c(1), c(-1), c(0), c(0), a()}});
  CHECK(exponent_vectors(W.witnesses) == expect);
  CHECK(W.extra_count == 1);
  CHECK_FALSE(W.search_inconclusive);
  for (const auto& w : W.witnesses) CHECK(w.minimal == TriState::Yes);
  // the extra witness has negative support {3} (1-based), matching the
  // single-index shape
  for (const auto& w : W.witnesses) {
    if (w.v[0].is_zero()) CHECK(w.nsupp == std::vector<int>{2});
  }
}

TEST_CASE("rank certificate for the demo configuration") {
  RankCertificate cert = rank_certificate(demo_config(), 0, 50, 6);
  CHECK(cert.vol == 8);
  CHECK_FALSE(cert.no_embedded_pair);
  CHECK(cert.jump_proven);
  CHECK(cert.asserted_lower_bound == 9);
  CHECK(cert.kernel_dim == 1);
  CHECK(cert.witnesses.size() == 2);
  CHECK(cert.extra_span_dim == 2);
  RFVec beta_expect = {a(), c(1), a()};
  CHECK(cert.beta == beta_expect);
  RFVec bp_expect = {a() + c(1), c(2), a()};
  CHECK(cert.beta_prime == bp_expect);
  RFVec line = {c(-1), c(0), c(0), c(1), c(0), a()};
  CHECK(cert.eta_alpha_me1 == line);
  CHECK(cert.logfree_count_beta == 9);
  CHECK(cert.headline_lower_bound == 9);
  CHECK(cert.warnings.empty());
}

TEST_CASE("rank certificate is seed independent on the demo configuration") {
  RankCertificate base = rank_certificate(demo_config(), 1, 50, 6);
  for (std::uint64_t seed = 2; seed <= 5; ++seed) {
    RankCertificate other = rank_certificate(demo_config(), seed, 50, 6);
    CHECK(other.beta == base.beta);
    CHECK(other.asserted_lower_bound == base.asserted_lower_bound);
    CHECK(exponent_vectors(other.witnesses) == exponent_vectors(base.witnesses));
    CHECK(exponent_vectors(other.K) == exponent_vectors(base.K));
  }
}

TEST_CASE("diagnostic certificates for cohen-macaulay inputs") {
  RankCertificate cert = rank_certificate(twisted_cubic(), 0, 50, 6);
  CHECK(cert.no_embedded_pair);
  CHECK(cert.vol == 2);
  CHECK(cert.asserted_lower_bound == 2);
  CHECK_FALSE(cert.jump_proven);

  Configuration square = Configuration::make_from_rows({{1, 1}, {0, 1}});
  RankCertificate c2 = rank_certificate(square, 0, 50, 6);
  CHECK(c2.no_embedded_pair);
}

TEST_CASE("cohen-macaulay verdicts") {
  CHECK(is_cohen_macaulay_generic(demo_config()) == CmVerdict::NotApplicable);
  CHECK(is_cohen_macaulay_generic(twisted_cubic()) == CmVerdict::CM);
  Configuration square = Configuration::make_from_rows({{1, 1}, {0, 1}});
  CHECK(is_cohen_macaulay_generic(square) == CmVerdict::CM);
}

TEST_CASE("integer translate exponents of kernel elements avoid the pivot support") {
  // the testable restatement of the translate condition: for u in K and any
  // minimal fake exponent v with v - u integral, the pivot is not in nsupp(v)
  Configuration cfg = demo_config();
  FakeExponentResult F = fake_exponents(cfg, demo_beta_prime(), demo_weight(), 50);
  std::vector<const FakeExponent*> minimal;
  for (const auto& fe : F.exponents)
    if (fe.minimal == TriState::Yes) minimal.push_back(&fe);
  for (const auto* u : minimal) {
    if (!u->v[0].is_zero()) continue;
    for (const auto* v : minimal) {
      bool integral = true;
      for (int i = 0; i < 6; ++i)
        if (!(v->v[i] - u->v[i]).is_integer_constant()) integral = false;
      if (!integral) continue;
      CHECK(std::find(v->nsupp.begin(), v->nsupp.end(), 0) == v->nsupp.end());
    }
  }
}
