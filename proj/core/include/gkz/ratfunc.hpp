#pragma once

#include "gkz/numeric.hpp"

#include <optional>
#include <vector>

namespace gkz {

// Univariate rational function in the parameter "a" over Q, in canonical
// form: denominator monic and nonzero, numerator and denominator coprime,
// zero stored as 0/1. Canonical form makes operator== a value comparison,
// so fake exponents can be deduplicated and set-compared exactly.
//
// Coefficient vectors run from degree 0 upward with no trailing zeros.
class RatFunc {
 public:
  // Degrees past this indicate runaway cross-multiplication, not real input.
  static constexpr int kDegreeCap = 64;

  RatFunc() : num_{}, den_{Rat(1)} {}
  RatFunc(int c) : RatFunc(Rat(c)) {}  // NOLINT: implicit by design
  explicit RatFunc(const Rat& c);
  RatFunc(std::vector<Rat> num, std::vector<Rat> den);

  static RatFunc alpha();  // the indeterminate "a"
  static RatFunc poly(std::vector<Rat> coeffs);

  bool is_zero() const { return num_.empty(); }
  bool is_constant() const;
  bool is_polynomial() const { return den_.size() == 1; }
  // Constant value if is_constant(), otherwise nullopt.
  std::optional<Rat> constant_value() const;
  bool is_integer_constant() const;
  bool is_negative_integer_constant() const;

  int num_degree() const { return static_cast<int>(num_.size()) - 1; }
  const std::vector<Rat>& num_coeffs() const { return num_; }
  const std::vector<Rat>& den_coeffs() const { return den_; }

  Rat eval(const Rat& x) const;  // throws ZeroDenominator if den(x) == 0

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws ZeroDenominator on /0
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // Lexicographic on (num, den) coefficient data; a total order used only
  // for deterministic sorting, not for algebra.
  bool operator<(const RatFunc& o) const;

  std::string to_string(const std::string& var = "a") const;

 private:
  void canonicalize();
  std::vector<Rat> num_, den_;
};

using RFVec = std::vector<RatFunc>;

// Rational roots of the numerator polynomial (the parameter values where the
// function vanishes). Exact for degree <= 2; higher degrees fall back to a
// divisor search over the integer-cleared polynomial.
std::vector<Rat> rational_roots(const RatFunc& f);

std::string rfvec_to_string(const RFVec& v, const std::string& var = "a");

}  // namespace gkz
