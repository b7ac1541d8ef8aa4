#include "doctest.h"

#include "property_suites.hpp"

TEST_CASE("backend agreement on random monomial ideals") {
  SuiteResult r = suite_backend_agreement(200, 1001);
  CHECK(r.cases >= 200);
  CHECK_MESSAGE(r.failures == 0, r.note);
}

TEST_CASE("polyhedral oracle, chain, rank and volume-degree properties") {
  ConfigSuiteResult r = suite_configurations(200, 2002);
  CHECK(r.volume_degree.cases >= 200);
  CHECK_MESSAGE(r.volume_degree.failures == 0, r.volume_degree.note);
  CHECK_MESSAGE(r.oracle.failures == 0, r.oracle.note);
  CHECK(r.oracle.cases >= 200);
  CHECK_MESSAGE(r.chain.failures == 0, r.chain.note);
  CHECK_MESSAGE(r.rank_property.failures == 0, r.rank_property.note);
  CHECK_MESSAGE(r.gb_checks.failures == 0, r.gb_checks.note);
}

TEST_CASE("bounded-reversal count on random constraint systems") {
  SuiteResult r = suite_bounded_reversals(200, 3003);
  CHECK(r.cases >= 200);
  CHECK_MESSAGE(r.failures == 0, r.note);
}

TEST_CASE("series verification over random cohen-macaulay configurations") {
  SuiteResult r = suite_series_verification(200, 4004, 6);
  CHECK(r.cases >= 200);
  CHECK_MESSAGE(r.failures == 0, r.note);
}
