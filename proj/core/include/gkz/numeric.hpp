#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// denominator positive and the fraction reduced, which is exactly the
// canonical form the rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficient : Error {
  using Error::Error;
};
struct DegenerateConfiguration : Error {
  using Error::Error;
};
struct InvalidConfiguration : Error {
  using Error::Error;
};
struct DegeneratePair : Error {
  using Error::Error;
};
struct ZeroDenominator : Error {
  using Error::Error;
};
struct GenericityExhausted : Error {
  using Error::Error;
};
struct BoxTooSmall : Error {
  using Error::Error;
};
struct DegreeCapExceeded : Error {
  using Error::Error;
};
struct CoincidentRows : Error {
  using Error::Error;
};
struct InternalInvariant : Error {
  using Error::Error;
};

inline BigInt numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Largest integer <= q.
inline BigInt floor_rat(const Rat& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

// Smallest integer >= q.
inline BigInt ceil_rat(const Rat& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt c = n / d;
  if (n > 0 && c * d != n) ++c;
  return c;
}

std::string rat_to_string(const Rat& q);

// Parses "p", "-p", "p/q"; throws Error on malformed input.
Rat parse_rat(const std::string& s);

}  // namespace gkz
