#pragma once

#include "gkz/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkz {

// Exponent vector of a monomial in the d_1..d_n variables.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int n) : e(n, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }
  int total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // caller guarantees divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }  // container ordering only

  std::string to_string(const std::string& stem = "d") const;
};

// Pure difference d^plus - d^minus.
struct Binomial {
  Monomial plus, minus;
  bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
  bool operator<(const Binomial& o) const {
    return plus != o.plus ? plus < o.plus : minus < o.minus;
  }
  std::string to_string(const std::string& stem = "d") const;
};

// Rational weight vector refined by graded reverse lexicographic order on a
// declared variable sequence. For weight vectors with negative entries the
// comparison is only used on total-degree-homogeneous data, where the
// grevlex refinement makes it a total order per degree slice.
struct TermOrder {
  std::vector<Rat> weight;
  std::vector<int> grevlex_seq;  // grevlex_seq[k] = variable at position k; the last is cheapest

  static TermOrder grevlex(int n);
  static TermOrder weighted(std::vector<Rat> w);
  static TermOrder weighted_int(const std::vector<int>& w);
  // Plain grevlex with variable j moved last (the saturation order).
  static TermOrder grevlex_var_last(int n, int j);
  TermOrder with_tiebreak(std::vector<int> seq) const;

  int nvars() const { return static_cast<int>(grevlex_seq.size()); }
  // -1, 0, +1 for a < b, a == b, a > b
  int compare(const Monomial& a, const Monomial& b) const;
  Rat weight_of(const Monomial& a) const;
};

}  // namespace gkz
