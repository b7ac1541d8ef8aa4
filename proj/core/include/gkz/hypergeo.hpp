#pragma once

#include "gkz/config.hpp"
#include "gkz/ideal.hpp"
#include "gkz/ratfunc.hpp"
#include "gkz/stdpairs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkz {

enum class TriState { Yes, No, InconclusiveAtCap };
std::string to_string(TriState t);

// Indices whose entry is a constant negative integer.
std::vector<int> negative_support(const RFVec& v);

RFVec apply_matrix(const IntMatrix& A, const RFVec& v);

struct FakeExponent {
  RFVec v;
  StandardPair source;
  std::vector<int> nsupp;
  TriState minimal = TriState::InconclusiveAtCap;
};

struct FakeExponentResult {
  std::vector<FakeExponent> exponents;  // deduplicated, sorted by vector
  // alpha values that would make some otherwise-inconsistent pair system
  // consistent; reported so callers can mirror the exclusion lists
  std::vector<Rat> consistency_degenerations;
};

// Solves the per-standard-pair linear systems of in_w(I_A) over Q(alpha).
// Throws DegeneratePair when a pair system is underdetermined.
FakeExponentResult fake_exponents(const Configuration& cfg, const RFVec& beta, const std::vector<Rat>& w,
                                  long cap);
FakeExponentResult fake_exponents_for_pairs(const Configuration& cfg, const RFVec& beta,
                                            const std::vector<StandardPair>& pairs, long cap);

TriState has_minimal_negative_support(const Configuration& cfg, const RFVec& v, long cap);

// Lattice certificate that N_v = {0}, i.e. the canonical series of v is the
// bare monomial x^v.
TriState certify_single_term(const Configuration& cfg, const RFVec& v, long cap);

struct SeriesTerm {
  std::vector<BigInt> z;  // kernel coordinates; exponent = v + B z
  RFVec exponent;
  RatFunc coeff;
};

struct TruncatedSeries {
  RFVec base;
  std::vector<SeriesTerm> terms;  // lexicographic in z; contains z = 0 with coeff 1
  long radius = 0;
};

// All series terms with kernel coordinate max-norm <= radius and unchanged
// negative support, with the exact falling/rising factorial coefficients.
// Throws ZeroDenominator if a kept term has a vanishing denominator.
TruncatedSeries canonical_series(const Configuration& cfg, const RFVec& v, long radius);

std::string series_to_string(const TruncatedSeries& s);

// Exact annihilation check: every Euler operator kills the series termwise
// and every toric generator kills it on all slots whose both preimages lie
// inside the truncation box.
bool verify_solution(const Configuration& cfg, const RFVec& beta, const TruncatedSeries& s);
bool verify_solution(const Configuration& cfg, const RFVec& beta, const TruncatedSeries& s,
                     const BinomialIdeal& toric);

struct EmbeddedSelection {
  explicit EmbeddedSelection(Configuration c) : cfg(std::move(c)) {}

  int pivot = 0;               // original 0-based column moved to the front
  std::vector<int> perm;       // permuted column j = original column perm[j]
  Configuration cfg;           // permuted configuration
  StandardPair pair;           // (eta, {0} u tau) in permuted coordinates
  std::vector<int> tau;        // = {m+2, ..., n-1} in permuted coordinates
  std::vector<Rat> weight;     // weight whose initial ideal is monomial
  bool refined = false;        // in_{-e1} was not monomial, grevlex refinement used
  BinomialIdeal initial_e1;    // in_{-e1}(I_A), permuted coordinates
  MonomialIdeal inw;           // the monomial initial ideal in use
  std::vector<StandardPair> pairs;  // S(inw)
};

// Embedded standard pair selection following the weight-reversal and
// translate-maximality normalizations. nullopt when no reverse-lexicographic
// initial ideal carries an embedded pair of codimension one below minimal.
std::optional<EmbeddedSelection> select_embedded_pair(const Configuration& cfg, long cap);

struct AlphaAssignment {
  RFVec alpha;                    // length n; zero off tau, symbolic in one slot
  int symbolic_slot = -1;         // -1 when tau is empty
  std::vector<std::pair<int, Rat>> fixed;  // sampled non-integer values for the other tau slots
  std::vector<Rat> excluded_consistency;   // reported alpha exclusions
  std::vector<Rat> excluded_zero_first;
  int retries = 0;
};

// Samples the tau slots, keeping the lexicographically last one symbolic,
// and checks the genericity predicates computationally. Throws
// GenericityExhausted after the retry budget.
AlphaAssignment sample_alpha(const EmbeddedSelection& sel, std::uint64_t seed, long cap);

struct KernelResult {
  std::vector<FakeExponent> K;  // minimal negative support, first coordinate zero
  bool inconclusive = false;
  std::vector<std::string> warnings;
};

// ker(d_1) basis exponents for H_A(beta_prime) w.r.t. the given weight; each
// element is certified to yield a one-term series.
KernelResult kernel_K(const Configuration& cfg, const RFVec& beta_prime, const std::vector<Rat>& w, long cap);

struct WitnessResult {
  std::vector<FakeExponent> witnesses;  // re-verified fake exponents of H_A(beta)
  int extra_count = 0;                  // witnesses beyond the u - e_1 family
  bool search_inconclusive = false;
  std::vector<std::string> warnings;
};

WitnessResult cokernel_witnesses(const EmbeddedSelection& sel, const AlphaAssignment& alpha,
                                 const std::vector<FakeExponent>& K, const RFVec& beta, long cap);

struct RankCertificate {
  BigInt vol = 0;
  bool no_embedded_pair = false;
  bool jump_proven = false;
  BigInt asserted_lower_bound = 0;  // vol + 1 exactly when jump_proven
  BigInt headline_lower_bound = 0;  // max of the two reported bounds
  int logfree_count_beta = 0;       // second bound: minimal fake exponents of beta
  RFVec beta;                       // candidate parameter A (eta + alpha - e_1)
  RFVec beta_prime;                 // A (eta + alpha)
  RFVec eta_alpha_me1;              // eta + alpha - e_1, original coordinates
  std::vector<FakeExponent> K;         // original coordinates
  std::vector<FakeExponent> witnesses; // original coordinates
  int kernel_dim = 0;
  int extra_span_dim = 0;  // dimension of the span produced at eta + alpha
  std::optional<EmbeddedSelection> selection;
  AlphaAssignment alpha;
  std::vector<std::string> warnings;
};

RankCertificate rank_certificate(const Configuration& cfg, std::uint64_t seed, long cap, long radius);

enum class CmVerdict { CM, NotCM, NotApplicable };
std::string to_string(CmVerdict v);

// Embedded-prime criterion over all reverse-lexicographic initial ideals;
// only meaningful (and only applied) when I_A is generic.
CmVerdict is_cohen_macaulay_generic(const Configuration& cfg);

}  // namespace gkz
