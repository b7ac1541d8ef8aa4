#include "gkz/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkz {

int Monomial::total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

std::string Monomial::to_string(const std::string& stem) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    os << stem << (i + 1);
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  return os.str();
}

std::string Binomial::to_string(const std::string& stem) const {
  return plus.to_string(stem) + " - " + minus.to_string(stem);
}

TermOrder TermOrder::grevlex(int n) {
  TermOrder t;
  t.weight.assign(n, Rat(0));
  t.grevlex_seq.resize(n);
  for (int i = 0; i < n; ++i) t.grevlex_seq[i] = i;
  return t;
}

TermOrder TermOrder::weighted(std::vector<Rat> w) {
  TermOrder t = grevlex(static_cast<int>(w.size()));
  t.weight = std::move(w);
  return t;
}

TermOrder TermOrder::weighted_int(const std::vector<int>& w) {
  std::vector<Rat> rw(w.begin(), w.end());
  return weighted(std::move(rw));
}

TermOrder TermOrder::grevlex_var_last(int n, int j) {
  TermOrder t = grevlex(n);
  t.grevlex_seq.clear();
  for (int i = 0; i < n; ++i)
    if (i != j) t.grevlex_seq.push_back(i);
  t.grevlex_seq.push_back(j);
  return t;
}

TermOrder TermOrder::with_tiebreak(std::vector<int> seq) const {
  TermOrder t = *this;
  t.grevlex_seq = std::move(seq);
  return t;
}

Rat TermOrder::weight_of(const Monomial& a) const {
  Rat w(0);
  for (size_t i = 0; i < weight.size(); ++i)
    if (a.e[i] != 0) w += weight[i] * Rat(a.e[i]);
  return w;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  Rat wa = weight_of(a), wb = weight_of(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (size_t k = grevlex_seq.size(); k-- > 0;) {
    int v = grevlex_seq[k];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace gkz
