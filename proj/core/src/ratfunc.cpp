#include "gkz/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

namespace {

using Poly = std::vector<Rat>;

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  strip(r);
  return r;
}

Poly neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  strip(r);
  return r;
}

// Remainder of a by b (b nonzero).
Poly rem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    strip(a);
  }
  return a;
}

Poly quot(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    strip(a);
  }
  strip(q);
  return q;
}

Poly make_monic(Poly p) {
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace

RatFunc::RatFunc(const Rat& c) : num_{}, den_{Rat(1)} {
  if (c != 0) num_ = {c};
}

RatFunc::RatFunc(std::vector<Rat> num, std::vector<Rat> den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

RatFunc RatFunc::alpha() { return RatFunc({Rat(0), Rat(1)}, {Rat(1)}); }

RatFunc RatFunc::poly(std::vector<Rat> coeffs) { return RatFunc(std::move(coeffs), {Rat(1)}); }

void RatFunc::canonicalize() {
  strip(num_);
  strip(den_);
  if (den_.empty()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.empty()) {
    den_ = {Rat(1)};
    return;
  }
  if (den_.size() == 1) {
    if (den_[0] != 1) {
      for (auto& c : num_) c /= den_[0];
      den_[0] = Rat(1);
    }
    if (static_cast<int>(num_.size()) - 1 > kDegreeCap)
      throw DegreeCapExceeded("rational-function degree exceeds cap " + std::to_string(kDegreeCap));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.size() > 1) {
    num_ = quot(num_, g);
    den_ = quot(den_, g);
  }
  // monic denominator; the scale moves into the numerator
  Rat lead = den_.back();
  if (lead != 1) {
    for (auto& c : den_) c /= lead;
    for (auto& c : num_) c /= lead;
  }
  if (static_cast<int>(num_.size()) - 1 > kDegreeCap || static_cast<int>(den_.size()) - 1 > kDegreeCap)
    throw DegreeCapExceeded("rational-function degree exceeds cap " + std::to_string(kDegreeCap));
}

bool RatFunc::is_constant() const { return num_.size() <= 1 && den_.size() == 1; }

std::optional<Rat> RatFunc::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (num_.empty()) return Rat(0);
  return num_[0] / den_[0];
}

bool RatFunc::is_integer_constant() const {
  auto c = constant_value();
  return c && is_integer(*c);
}

bool RatFunc::is_negative_integer_constant() const {
  auto c = constant_value();
  return c && is_integer(*c) && *c < 0;
}

Rat RatFunc::eval(const Rat& x) const {
  Rat n(0), d(0), p(1);
  for (const auto& c : num_) {
    n += c * p;
    p *= x;
  }
  p = 1;
  for (const auto& c : den_) {
    d += c * p;
    p *= x;
  }
  if (d == 0) throw ZeroDenominator("evaluation at a pole");
  return n / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = neg(r.num_);
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(add(mul(num_, o.den_), mul(o.num_, den_)), mul(den_, o.den_));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(mul(num_, o.num_), mul(den_, o.den_)); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw ZeroDenominator("division by zero rational function");
  return RatFunc(mul(num_, o.den_), mul(den_, o.num_));
}

bool RatFunc::operator<(const RatFunc& o) const {
  auto cmp = [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  };
  int c = cmp(num_, o.num_);
  if (c != 0) return c < 0;
  return cmp(den_, o.den_) < 0;
}

namespace {

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Rat c = p[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat ab = c < 0 ? Rat(-c) : c;
    bool unit = (ab == 1);
    if (!unit || i == 0) os << rat_to_string(ab);
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

std::string RatFunc::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string n = poly_to_string(num_, var);
  if (den_.size() == 1) return n;  // canonical denominator 1
  std::string d = poly_to_string(den_, var);
  return "(" + n + ")/(" + d + ")";
}

std::vector<Rat> rational_roots(const RatFunc& f) {
  const auto& p = f.num_coeffs();
  if (p.empty()) return {};  // identically zero: no isolated roots to report
  if (p.size() == 1) return {};
  if (p.size() == 2) return {-p[0] / p[1]};
  if (p.size() == 3) {
    // c2 x^2 + c1 x + c0; rational roots exist iff the discriminant is a
    // square of a rational.
    Rat a = p[2], b = p[1], c = p[0];
    Rat disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    BigInt dn = numerator(disc), dd = denominator(disc);
    BigInt sn = boost::multiprecision::sqrt(dn), sd = boost::multiprecision::sqrt(dd);
    if (sn * sn != dn || sd * sd != dd) return {};
    Rat s = Rat(sn) / Rat(sd);
    std::vector<Rat> roots = {(-b + s) / (2 * a), (-b - s) / (2 * a)};
    if (roots[0] == roots[1]) roots.pop_back();
    return roots;
  }
  // Degree >= 3: clear denominators and try divisor pairs of the extreme
  // coefficients. Good enough for the small reporting-only cases here.
  BigInt lcm(1);
  for (const auto& c : p) {
    BigInt d = denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ip;
  ip.reserve(p.size());
  for (const auto& c : p) ip.push_back(numerator(c * Rat(lcm)));
  size_t lo = 0;
  while (lo < ip.size() && ip[lo] == 0) ++lo;
  BigInt a0 = ip[lo] < 0 ? BigInt(-ip[lo]) : ip[lo];
  BigInt ak = ip.back() < 0 ? BigInt(-ip.back()) : ip.back();
  auto divisors = [](const BigInt& v) {
    std::vector<BigInt> ds;
    for (BigInt i = 1; i * i <= v && i <= 4096; ++i) {
      if (v % i == 0) {
        ds.push_back(i);
        ds.push_back(v / i);
      }
    }
    return ds;
  };
  std::vector<Rat> roots;
  for (const auto& pn : divisors(a0)) {
    for (const auto& qd : divisors(ak)) {
      for (int sign : {1, -1}) {
        Rat cand = Rat(sign * pn) / Rat(qd);
        if (f.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
    }
  }
  if (lo > 0 && std::find(roots.begin(), roots.end(), Rat(0)) == roots.end()) roots.push_back(Rat(0));
  return roots;
}

std::string rfvec_to_string(const RFVec& v, const std::string& var) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string(var);
  }
  return s + ")";
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error("empty rational literal");
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(t));
    BigInt n(t.substr(0, slash)), d(t.substr(slash + 1));
    if (d == 0) throw Error("zero denominator in rational literal");
    return Rat(n) / Rat(d);
  } catch (const std::exception& e) {
    throw Error("malformed rational literal '" + s + "'");
  }
}

}  // namespace gkz
