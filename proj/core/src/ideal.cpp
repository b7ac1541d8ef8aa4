#include "gkz/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace gkz {

namespace {

std::vector<Element> to_elements(const BinomialIdeal& I) {
  std::vector<Element> es;
  es.reserve(I.size());
  for (const auto& m : I.monomials) es.push_back(Element{m, std::nullopt});
  for (const auto& b : I.binomials) es.push_back(Element{b.plus, b.minus});
  return es;
}

BinomialIdeal from_elements(int nvars, const std::vector<Element>& es) {
  BinomialIdeal I(nvars);
  for (const auto& e : es) {
    if (e.is_monomial())
      I.monomials.push_back(e.plus);
    else
      I.binomials.push_back(Binomial{e.plus, *e.minus});
  }
  I.sort_canonical();
  return I;
}

// Orient a binomial so plus is the leading term; equal terms mean zero.
std::optional<Element> orient(Element f, const TermOrder& ord) {
  if (f.is_monomial()) return f;
  int c = ord.compare(f.plus, *f.minus);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(f.plus, *f.minus);
  return f;
}

const Element* find_reducer(const Monomial& t, const std::vector<Element>& basis, const Element* skip) {
  for (const auto& g : basis) {
    if (&g == skip) continue;
    if (g.plus.divides(t)) return &g;
  }
  return nullptr;
}

// Full normal form against `basis`; nullopt encodes zero. The remainder is
// sign-agnostic: a monomial arising from a killed term stands for +/- it.
std::optional<Element> reduce_full(Element f, const std::vector<Element>& basis, const TermOrder& ord,
                                   const Element* skip = nullptr) {
  auto of = orient(std::move(f), ord);
  if (!of) return std::nullopt;
  Element cur = *of;
  while (true) {
    if (cur.is_monomial()) {
      const Element* g = find_reducer(cur.plus, basis, skip);
      if (!g) return cur;
      if (g->is_monomial()) return std::nullopt;
      cur.plus = cur.plus / g->plus * *g->minus;
      continue;
    }
    // leading term first
    const Element* g = find_reducer(cur.plus, basis, skip);
    if (g) {
      if (g->is_monomial()) {
        cur = Element{*cur.minus, std::nullopt};
      } else {
        cur.plus = cur.plus / g->plus * *g->minus;
        auto re = orient(std::move(cur), ord);
        if (!re) return std::nullopt;
        cur = *re;
      }
      continue;
    }
    // then the tail
    const Element* h = find_reducer(*cur.minus, basis, skip);
    if (h) {
      if (h->is_monomial()) {
        cur = Element{cur.plus, std::nullopt};
      } else {
        cur.minus = *cur.minus / h->plus * *h->minus;
        if (cur.plus == *cur.minus) return std::nullopt;
      }
      continue;
    }
    return cur;
  }
}

std::optional<Element> s_pair(const Element& f, const Element& g, const TermOrder& ord) {
  if (f.is_monomial() && g.is_monomial()) return std::nullopt;
  Monomial L = Monomial::lcm(f.plus, g.plus);
  if (f.is_monomial()) return Element{L / g.plus * *g.minus, std::nullopt};
  if (g.is_monomial()) return Element{L / f.plus * *f.minus, std::nullopt};
  Element s{L / g.plus * *g.minus, L / f.plus * *f.minus};
  return orient(std::move(s), ord);
}

void assert_homogeneous_if_needed(const std::vector<Element>& es, const TermOrder& ord) {
  bool weight_nonneg = std::all_of(ord.weight.begin(), ord.weight.end(), [](const Rat& q) { return q >= 0; });
  if (weight_nonneg) return;
  for (const auto& e : es) {
    if (!e.is_monomial() && e.plus.total_degree() != e.minus->total_degree())
      throw InternalInvariant("non-global weight order on inhomogeneous input");
  }
}

}  // namespace

void BinomialIdeal::sort_canonical() {
  std::sort(binomials.begin(), binomials.end());
  binomials.erase(std::unique(binomials.begin(), binomials.end()), binomials.end());
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

bool BinomialIdeal::operator==(const BinomialIdeal& o) const {
  return nvars == o.nvars && binomials == o.binomials && monomials == o.monomials;
}

std::string BinomialIdeal::to_string(const std::string& stem) const {
  std::ostringstream os;
  os << "<";
  bool first = true;
  for (const auto& m : monomials) {
    if (!first) os << ", ";
    os << m.to_string(stem);
    first = false;
  }
  for (const auto& b : binomials) {
    if (!first) os << ", ";
    os << b.to_string(stem);
    first = false;
  }
  os << ">";
  return os.str();
}

BinomialIdeal lattice_ideal(const Configuration& cfg) {
  BinomialIdeal I(cfg.n());
  const IntMatrix& B = cfg.gale();
  for (int k = 0; k < B.cols(); ++k) {
    Monomial plus(cfg.n()), minus(cfg.n());
    for (int i = 0; i < cfg.n(); ++i) {
      const BigInt& v = B.at(i, k);
      if (v > 0)
        plus[i] = static_cast<int>(v);
      else if (v < 0)
        minus[i] = static_cast<int>(-v);
    }
    I.binomials.push_back(Binomial{plus, minus});
  }
  I.sort_canonical();
  return I;
}

BinomialIdeal buchberger(const BinomialIdeal& I, const TermOrder& ord) {
  std::vector<Element> basis;
  for (auto& e : to_elements(I)) {
    auto oe = orient(e, ord);
    if (oe) basis.push_back(*oe);
  }
  assert_homogeneous_if_needed(basis, ord);

  // normal selection: minimal lcm degree, then lexicographic lcm
  struct PairKey {
    int deg;
    std::vector<int> lcm;
    size_t i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (lcm != o.lcm) return lcm < o.lcm;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> queue;
  auto push_pairs = [&](size_t jnew) {
    for (size_t i = 0; i < jnew; ++i) {
      const Element &f = basis[i], &g = basis[jnew];
      if (f.is_monomial() && g.is_monomial()) continue;
      Monomial L = Monomial::lcm(f.plus, g.plus);
      if (!f.is_monomial() && !g.is_monomial() && L == f.plus * g.plus) continue;  // coprime leads
      queue.insert(PairKey{L.total_degree(), L.e, i, jnew});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    auto s = s_pair(basis[pk.i], basis[pk.j], ord);
    if (!s) continue;
    auto r = reduce_full(*s, basis, ord);
    if (!r) continue;
    basis.push_back(*r);
    push_pairs(basis.size() - 1);
  }

  // inter-reduce to the reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      Element g = basis[i];
      auto r = reduce_full(g, basis, ord, &basis[i]);
      if (!r) {
        basis.erase(basis.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      if (!(*r == g)) {
        basis[i] = *r;
        changed = true;
      }
    }
  }
  return from_elements(I.nvars, basis);
}

NormalFormResult normal_form(const Element& f, const BinomialIdeal& G, const TermOrder& ord) {
  auto basis = to_elements(G);
  for (auto& e : basis) {
    auto oe = orient(e, ord);
    if (oe) e = *oe;
  }
  auto r = reduce_full(f, basis, ord);
  NormalFormResult res;
  if (r) {
    res.zero = false;
    res.value = *r;
  }
  return res;
}

namespace {

// (I : d_j^inf) for a homogeneous binomial ideal: divide the highest d_j
// power out of every element of a grevlex-(d_j last) Groebner basis.
BinomialIdeal saturate_variable(const BinomialIdeal& I, int j) {
  BinomialIdeal G = buchberger(I, TermOrder::grevlex_var_last(I.nvars, j));
  BinomialIdeal out(I.nvars);
  for (auto m : G.monomials) {
    m[j] = 0;
    out.monomials.push_back(m);
  }
  for (auto b : G.binomials) {
    int c = std::min(b.plus[j], b.minus[j]);
    b.plus[j] -= c;
    b.minus[j] -= c;
    out.binomials.push_back(b);
  }
  out.sort_canonical();
  return out;
}

}  // namespace

BinomialIdeal toric_ideal(const Configuration& cfg) {
  // pure function of the matrix; memoized because the pipeline layers above
  // recompute it freely
  static std::mutex cache_mutex;
  static std::map<std::vector<BigInt>, BinomialIdeal> cache;
  std::vector<BigInt> key;
  key.reserve(static_cast<size_t>(cfg.d()) * cfg.n() + 2);
  key.push_back(cfg.d());
  key.push_back(cfg.n());
  for (int i = 0; i < cfg.d(); ++i)
    for (int j = 0; j < cfg.n(); ++j) key.push_back(cfg.matrix().at(i, j));
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  BinomialIdeal J = lattice_ideal(cfg);
  while (true) {
    BinomialIdeal before = J;
    for (int j = 0; j < cfg.n(); ++j) J = saturate_variable(J, j);
    if (J == before) break;
  }
  BinomialIdeal G = buchberger(J, TermOrder::grevlex(cfg.n()));
  BinomialIdeal result = minimal_generators(G);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), result);
  return result;
}

BinomialIdeal initial_forms(const BinomialIdeal& G, const std::vector<Rat>& w) {
  TermOrder wo = TermOrder::weighted(w);
  TermOrder tie = TermOrder::grevlex(G.nvars);
  BinomialIdeal out(G.nvars);
  out.monomials = G.monomials;
  for (const auto& b : G.binomials) {
    Rat wp = wo.weight_of(b.plus), wm = wo.weight_of(b.minus);
    if (wp > wm) {
      out.monomials.push_back(b.plus);
    } else if (wm > wp) {
      out.monomials.push_back(b.minus);
    } else {
      Binomial t = b;
      if (tie.compare(t.plus, t.minus) < 0) std::swap(t.plus, t.minus);
      out.binomials.push_back(t);
    }
  }
  out.sort_canonical();
  return out;
}

BinomialIdeal initial_ideal(const Configuration& cfg, const std::vector<Rat>& w) {
  BinomialIdeal IA = toric_ideal(cfg);
  BinomialIdeal G = buchberger(IA, TermOrder::weighted(w));
  return minimal_generators(initial_forms(G, w));
}

bool is_monomial_ideal(const BinomialIdeal& I) { return I.binomials.empty(); }

BinomialIdeal minimal_generators(const BinomialIdeal& I) {
  if (I.binomials.empty()) {
    // monomial ideals minimalize by divisibility alone
    BinomialIdeal out(I.nvars);
    std::vector<Monomial> gens = I.monomials;
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      int da = a.total_degree(), db = b.total_degree();
      return da != db ? da < db : a < b;
    });
    for (const auto& g : gens) {
      bool redundant =
          std::any_of(out.monomials.begin(), out.monomials.end(), [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) out.monomials.push_back(g);
    }
    out.sort_canonical();
    return out;
  }
  std::vector<Element> es = to_elements(I);
  std::stable_sort(es.begin(), es.end(), [](const Element& a, const Element& b) {
    int da = a.plus.total_degree(), db = b.plus.total_degree();
    if (da != db) return da < db;
    return a < b;
  });
  TermOrder ord = TermOrder::grevlex(I.nvars);
  for (size_t i = 0; i < es.size();) {
    std::vector<Element> others;
    others.reserve(es.size() - 1);
    for (size_t k = 0; k < es.size(); ++k)
      if (k != i) others.push_back(es[k]);
    BinomialIdeal G = buchberger(from_elements(I.nvars, others), ord);
    if (normal_form(es[i], G, ord).zero)
      es.erase(es.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return from_elements(I.nvars, es);
}

bool is_generic(const Configuration& cfg) {
  BinomialIdeal IA = toric_ideal(cfg);
  for (const auto& b : IA.binomials) {
    for (int i = 0; i < cfg.n(); ++i)
      if (b.plus[i] == b.minus[i]) return false;
  }
  return true;  // vacuously true when there are no generators
}

bool ideals_equal(const BinomialIdeal& I, const BinomialIdeal& J) {
  if (I.nvars != J.nvars) return false;
  TermOrder ord = TermOrder::grevlex(I.nvars);
  BinomialIdeal GI = buchberger(I, ord), GJ = buchberger(J, ord);
  for (const auto& e : to_elements(J))
    if (!normal_form(e, GI, ord).zero) return false;
  for (const auto& e : to_elements(I))
    if (!normal_form(e, GJ, ord).zero) return false;
  return true;
}

bool ideal_contains(const BinomialIdeal& I, const Element& f) {
  TermOrder ord = TermOrder::grevlex(I.nvars);
  BinomialIdeal G = buchberger(I, ord);
  return normal_form(f, G, ord).zero;
}

bool all_spairs_reduce_to_zero(const BinomialIdeal& G, const TermOrder& ord) {
  auto basis = to_elements(G);
  for (auto& e : basis) {
    auto oe = orient(e, ord);
    if (!oe) return false;
    e = *oe;
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      auto s = s_pair(basis[i], basis[j], ord);
      if (!s) continue;
      if (reduce_full(*s, basis, ord)) return false;
    }
  }
  return true;
}

std::vector<Rat> refine_weight_by_grevlex(const std::vector<Rat>& pre, int n, int deg_bound) {
  // For total degree <= deg_bound, grevlex between equal-degree monomials is
  // realized by the weights C^n - C^j with C > deg_bound + 1; scaling the
  // pre-weight by C^(n+1) keeps it strictly dominant on those degrees.
  BigInt C(deg_bound + 2);
  BigInt Cn = 1;
  for (int i = 0; i < n; ++i) Cn *= C;
  BigInt big = Cn * C;
  std::vector<Rat> w(n);
  BigInt Cj = 1;
  for (int j = 0; j < n; ++j) {
    w[j] = pre[j] * Rat(big) + Rat(Cn - Cj);
    Cj *= C;
  }
  return w;
}

std::vector<Rat> default_refined_weight(const Configuration& cfg, int pivot) {
  std::vector<Rat> pre(cfg.n(), Rat(0));
  pre[pivot] = Rat(-1);
  BinomialIdeal IA = toric_ideal(cfg);
  BinomialIdeal G = buchberger(IA, TermOrder::weighted(pre));
  int maxdeg = 1;
  for (const auto& b : G.binomials) maxdeg = std::max(maxdeg, b.plus.total_degree());
  for (const auto& m : G.monomials) maxdeg = std::max(maxdeg, m.total_degree());
  return refine_weight_by_grevlex(pre, cfg.n(), maxdeg + 1);
}

}  // namespace gkz
