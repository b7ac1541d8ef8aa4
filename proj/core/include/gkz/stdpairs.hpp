#pragma once

#include "gkz/config.hpp"
#include "gkz/ideal.hpp"

#include <set>
#include <vector>

namespace gkz {

// Monomial ideal given by its unique minimal (antichain) generators.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;

  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);
  static MonomialIdeal from_binomial_ideal(const BinomialIdeal& I);  // requires is_monomial_ideal

  bool contains(const Monomial& m) const;
  int max_degree(int var) const;
};

struct StandardPair {
  Monomial eta;
  std::vector<int> sigma;  // 0-based, sorted

  bool operator==(const StandardPair& o) const { return eta == o.eta && sigma == o.sigma; }
  bool operator<(const StandardPair& o) const {
    return eta != o.eta ? eta < o.eta : sigma < o.sigma;
  }
  std::string to_string(const std::string& stem = "d") const;
};

enum class PairClass { TopDimensional, Embedded };

PairClass classify_pair(const StandardPair& p, int nvars, int m);

// The complete standard pair decomposition S(M).
std::vector<StandardPair> standard_pairs(const MonomialIdeal& M);

// Independent oracle: reconstructs the pairs by scanning the staircase
// inside [0, box]^n. Throws BoxTooSmall if a generator pokes out.
std::vector<StandardPair> brute_force_standard_pairs(const MonomialIdeal& M, int box);

// Complements sigma-bar, one per distinct sigma-complement among the pairs.
std::set<std::vector<int>> associated_primes(const MonomialIdeal& M);

// Number of top-dimensional standard pairs (m = codimension of the toric
// ideal whose initial ideal M is).
int degree(const MonomialIdeal& M, int m);

// Every embedded associated prime contains an associated prime with exactly
// one fewer variable.
bool check_chain_property(const MonomialIdeal& M);

enum class OracleVerdict { Yes, No, Inconclusive };

// Polyhedral membership test for standard pairs of in_w(I_A): the pair's
// polytope has 0 as the only lattice point and every non-sigma inequality is
// essential. Inconclusive when an essentiality search is cap-limited.
OracleVerdict is_standard_pair_polyhedral(const Configuration& cfg, const std::vector<Rat>& w,
                                          const StandardPair& p, long cap);

}  // namespace gkz
