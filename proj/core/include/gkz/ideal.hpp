#pragma once

#include "gkz/config.hpp"
#include "gkz/monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkz {

// Generators of an ideal spanned by pure-difference binomials and, after
// initial-form extraction or saturation steps, plain monomials. Coefficients
// never leave {+1, -1}: S-polynomials and reductions of pure differences are
// again pure differences, and the implementation relies on that closure.
struct BinomialIdeal {
  int nvars = 0;
  std::vector<Binomial> binomials;
  std::vector<Monomial> monomials;

  BinomialIdeal() = default;
  explicit BinomialIdeal(int n) : nvars(n) {}

  bool empty() const { return binomials.empty() && monomials.empty(); }
  size_t size() const { return binomials.size() + monomials.size(); }
  void sort_canonical();
  bool operator==(const BinomialIdeal& o) const;
  std::string to_string(const std::string& stem = "d") const;
};

// A single GB element: a binomial when minus is set, a monomial otherwise.
struct Element {
  Monomial plus;
  std::optional<Monomial> minus;

  bool is_monomial() const { return !minus.has_value(); }
  bool operator==(const Element& o) const { return plus == o.plus && minus == o.minus; }
  bool operator<(const Element& o) const {
    return plus != o.plus ? plus < o.plus : minus < o.minus;
  }
};

// d^(b+) - d^(b-) for every Gale dual column; the saturation seed.
BinomialIdeal lattice_ideal(const Configuration& cfg);

// I_A as (lattice ideal : (d_1...d_n)^inf), presented by the minimal
// generators extracted from the reduced grevlex Groebner basis. This fixes
// the generator choice in A-degrees that admit more than one.
BinomialIdeal toric_ideal(const Configuration& cfg);

// Reduced Groebner basis. Input elements must be total-degree homogeneous
// whenever the order's weight vector is not nonnegative.
BinomialIdeal buchberger(const BinomialIdeal& I, const TermOrder& ord);

struct NormalFormResult {
  bool zero = true;
  Element value;  // valid when !zero
};

// Exact remainder modulo a Groebner basis G; zero iff the input is in <G>.
NormalFormResult normal_form(const Element& f, const BinomialIdeal& G, const TermOrder& ord);

// Ideal of w-initial forms of a Groebner basis of I_A under (w, grevlex);
// weight ties stay binomials. Output is minimalized.
BinomialIdeal initial_ideal(const Configuration& cfg, const std::vector<Rat>& w);

// Initial forms of the given (already Groebner) basis under weight w only.
BinomialIdeal initial_forms(const BinomialIdeal& G, const std::vector<Rat>& w);

bool is_monomial_ideal(const BinomialIdeal& I);

// Discards generators contained in the ideal of the others, in increasing
// total degree; membership via Groebner normal form.
BinomialIdeal minimal_generators(const BinomialIdeal& I);

// Every minimal generator of I_A has full support in plus - minus.
bool is_generic(const Configuration& cfg);

// Equality as ideals (mutual normal-form membership).
bool ideals_equal(const BinomialIdeal& I, const BinomialIdeal& J);

// Membership f in <I>.
bool ideal_contains(const BinomialIdeal& I, const Element& f);

// Self-check: every S-pair of G reduces to zero.
bool all_spairs_reduce_to_zero(const BinomialIdeal& G, const TermOrder& ord);

// The explicit integer weight vector representing "weight pre refined by
// grevlex" on all monomials of total degree < deg_bound.
std::vector<Rat> refine_weight_by_grevlex(const std::vector<Rat>& pre, int n, int deg_bound);

// Canonical generic refinement of -e_pivot used by the whole pipeline: the
// pre-weight -e_pivot composed with the grevlex tiebreak, realized as an
// explicit weight vector valid through the reduced GB degrees of I_A.
std::vector<Rat> default_refined_weight(const Configuration& cfg, int pivot);

}  // namespace gkz
