#include "gkz/ineq.hpp"

#include <algorithm>
#include <map>

namespace gkz {

void IneqSystem::add(std::vector<Rat> c, Rat k, std::string label) {
  if (static_cast<int>(c.size()) != dim) throw Error("constraint dimension mismatch");
  rows.push_back(Constraint{std::move(c), std::move(k), std::move(label)});
}

void IneqSystem::add_int(const std::vector<int>& c, int k, std::string label) {
  std::vector<Rat> rc(c.begin(), c.end());
  add(std::move(rc), Rat(k), std::move(label));
}

namespace {

// Scale to integer entries with content 1, preserving orientation. Makes
// duplicate detection a plain equality test.
void normalize_constraint(Constraint& r) {
  BigInt lcm(1);
  for (const auto& q : r.c) {
    BigInt d = denominator(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  {
    BigInt d = denominator(r.k);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  BigInt g(0);
  for (auto& q : r.c) {
    q *= Rat(lcm);
    g = boost::multiprecision::gcd(g, numerator(q));
  }
  r.k *= Rat(lcm);
  if (g == 0) return;  // constant constraint, leave k scaled as-is
  for (auto& q : r.c) q /= Rat(g);
  r.k /= Rat(g);
}

void dedupe(IneqSystem& S) {
  // identical normal vectors keep only the tightest bound
  std::map<std::vector<Rat>, size_t> best;
  IneqSystem out(S.dim);
  for (auto& r : S.rows) {
    normalize_constraint(r);
    bool all_zero = std::all_of(r.c.begin(), r.c.end(), [](const Rat& q) { return q == 0; });
    if (all_zero && r.k >= 0) continue;  // trivially true
    auto it = best.find(r.c);
    if (it == best.end()) {
      best[r.c] = out.rows.size();
      out.rows.push_back(r);
    } else if (r.k < out.rows[it->second].k) {
      out.rows[it->second] = r;
    }
  }
  S = std::move(out);
}

}  // namespace

IneqSystem eliminate(const IneqSystem& S, int coord) {
  if (coord < 0 || coord >= S.dim) throw Error("eliminate: coordinate out of range");
  IneqSystem T(S.dim - 1);
  auto strip = [&](const Constraint& r, const Rat& scale) {
    Constraint nr;
    nr.k = r.k * scale;
    nr.c.reserve(S.dim - 1);
    for (int j = 0; j < S.dim; ++j)
      if (j != coord) nr.c.push_back(r.c[j] * scale);
    return nr;
  };
  std::vector<size_t> pos, neg;
  for (size_t i = 0; i < S.rows.size(); ++i) {
    const Rat& a = S.rows[i].c[coord];
    if (a == 0) {
      T.rows.push_back(strip(S.rows[i], Rat(1)));
    } else if (a > 0) {
      pos.push_back(i);
    } else {
      neg.push_back(i);
    }
  }
  for (size_t ip : pos) {
    const Constraint& p = S.rows[ip];
    Constraint ps = strip(p, Rat(1) / p.c[coord]);
    for (size_t in : neg) {
      const Constraint& q = S.rows[in];
      Rat s = Rat(-1) / q.c[coord];
      Constraint comb = ps;
      for (int j = 0; j < T.dim; ++j) comb.c[j] += q.c[j < coord ? j : j + 1] * s;
      comb.k += q.k * s;
      T.rows.push_back(std::move(comb));
    }
  }
  dedupe(T);
  return T;
}

namespace {

IneqSystem recession_cone(const IneqSystem& S) {
  IneqSystem C = S;
  for (auto& r : C.rows) r.k = 0;
  dedupe(C);
  return C;
}

// Project down to the single coordinate `keep` by eliminating all others.
IneqSystem project_to_coordinate(IneqSystem S, int keep) {
  for (int c = S.dim - 1; c >= 0; --c) {
    if (c == keep) continue;
    S = eliminate(S, c);
    if (c < keep) --keep;
  }
  return S;
}

}  // namespace

bool is_bounded(const IneqSystem& S) {
  if (S.dim == 0) return true;
  IneqSystem cone = recession_cone(S);
  for (int i = 0; i < S.dim; ++i) {
    IneqSystem line = project_to_coordinate(cone, i);
    bool has_pos = false, has_neg = false;
    for (const auto& r : line.rows) {
      if (r.c[0] > 0) has_pos = true;
      if (r.c[0] < 0) has_neg = true;
    }
    if (!has_pos || !has_neg) return false;
  }
  return true;
}

bool is_feasible(const IneqSystem& S) {
  IneqSystem cur = S;
  for (int c = S.dim - 1; c >= 0; --c) cur = eliminate(cur, c);
  for (const auto& r : cur.rows)
    if (r.k < 0) return false;
  return true;
}

namespace {

struct Cascade {
  // stage[j] is a system on coordinates 0..j-1; stage[dim] is the input.
  std::vector<IneqSystem> stage;
};

Cascade build_cascade(const IneqSystem& S) {
  Cascade c;
  c.stage.resize(S.dim + 1);
  c.stage[S.dim] = S;
  for (int j = S.dim; j >= 1; --j) c.stage[j - 1] = eliminate(c.stage[j], j - 1);
  return c;
}

// Integer range for coordinate j-1 given a fixed prefix, from stage j.
// Returns false if the slice is empty.
bool slice_range(const IneqSystem& stage, const std::vector<BigInt>& prefix, std::optional<Rat>& lo,
                 std::optional<Rat>& hi) {
  lo.reset();
  hi.reset();
  const int j = stage.dim - 1;
  for (const auto& r : stage.rows) {
    Rat rhs = r.k;
    for (int i = 0; i < j; ++i) rhs -= r.c[i] * Rat(prefix[i]);
    const Rat& a = r.c[j];
    if (a == 0) {
      if (rhs < 0) return false;
    } else if (a > 0) {
      Rat bound = rhs / a;
      if (!hi || bound < *hi) hi = bound;
    } else {
      Rat bound = rhs / a;
      if (!lo || bound > *lo) lo = bound;
    }
  }
  return true;
}

void enumerate_rec(const Cascade& cas, int depth, std::vector<BigInt>& prefix, bool capped, long cap,
                   std::vector<std::vector<BigInt>>& out) {
  if (depth == static_cast<int>(cas.stage.size())) {
    out.push_back(prefix);
    return;
  }
  std::optional<Rat> lo, hi;
  if (!slice_range(cas.stage[depth], prefix, lo, hi)) return;
  BigInt ilo, ihi;
  if (lo)
    ilo = ceil_rat(*lo);
  else if (capped)
    ilo = -cap;
  else
    throw InternalInvariant("unbounded slice in certified-bounded enumeration");
  if (hi)
    ihi = floor_rat(*hi);
  else if (capped)
    ihi = cap;
  else
    throw InternalInvariant("unbounded slice in certified-bounded enumeration");
  if (capped) {
    if (ilo < -cap) ilo = -cap;
    if (ihi > cap) ihi = cap;
  }
  for (BigInt v = ilo; v <= ihi; ++v) {
    prefix.push_back(v);
    enumerate_rec(cas, depth + 1, prefix, capped, cap, out);
    prefix.pop_back();
  }
}

}  // namespace

LatticePointReport enumerate_lattice_points(const IneqSystem& S, long cap) {
  if (cap < 1) throw Error("enumeration cap must be >= 1");
  LatticePointReport rep;
  if (S.dim == 0) {
    rep.exhaustive = true;
    bool ok = std::all_of(S.rows.begin(), S.rows.end(), [](const Constraint& r) { return r.k >= 0; });
    if (ok) rep.points.push_back({});
    return rep;
  }
  const bool bounded = is_bounded(S);
  Cascade cas = build_cascade(S);
  std::vector<BigInt> prefix;
  enumerate_rec(cas, 1, prefix, !bounded, cap, rep.points);
  rep.exhaustive = bounded;
  BigInt radius(0);
  for (const auto& p : rep.points)
    for (const auto& v : p) radius = std::max(radius, v < 0 ? BigInt(-v) : v);
  rep.search_radius_used = bounded ? static_cast<long>(radius) : cap;
  std::sort(rep.points.begin(), rep.points.end());
  return rep;
}

std::set<int> unbounded_reversals(const IneqSystem& S) {
  std::set<int> result;
  for (size_t j = 0; j < S.rows.size(); ++j) {
    IneqSystem R = S;
    for (auto& q : R.rows[j].c) q = -q;
    R.rows[j].k = -R.rows[j].k;
    if (!is_feasible(R)) continue;  // empty sets are bounded
    if (!is_bounded(R)) result.insert(static_cast<int>(j));
  }
  return result;
}

namespace {

// Exact infimum of objective . z over the rational solution set, or nullopt
// if unbounded below. Caller guarantees feasibility.
std::optional<Rat> rational_infimum(const IneqSystem& S, const std::vector<Rat>& objective) {
  // introduce t = objective . z and project everything onto t
  IneqSystem E(S.dim + 1);
  for (const auto& r : S.rows) {
    std::vector<Rat> c = r.c;
    c.push_back(Rat(0));
    E.add(std::move(c), r.k);
  }
  std::vector<Rat> up = objective, dn;
  up.push_back(Rat(-1));
  dn.reserve(up.size());
  for (const auto& q : up) dn.push_back(-q);
  E.add(up, Rat(0));
  E.add(dn, Rat(0));
  for (int c = S.dim - 1; c >= 0; --c) E = eliminate(E, c);
  std::optional<Rat> lo;
  for (const auto& r : E.rows) {
    if (r.c[0] < 0) {
      Rat bound = r.k / r.c[0];
      if (!lo || bound > *lo) lo = bound;
    }
  }
  return lo;
}

}  // namespace

LatticeMinResult minimize_on_lattice(const IneqSystem& S, const std::vector<Rat>& objective, long cap) {
  LatticeMinResult res;
  if (!is_feasible(S)) return res;
  {
    IneqSystem cone = recession_cone(S);
    std::vector<Rat> obj = objective;
    cone.add(std::move(obj), Rat(-1));
    if (is_feasible(cone)) {
      res.bounded_objective = false;
      return res;
    }
  }
  LatticePointReport rep = enumerate_lattice_points(S, cap);
  res.exhaustive = rep.exhaustive;
  for (const auto& p : rep.points) {
    Rat val(0);
    for (size_t i = 0; i < p.size(); ++i) val += objective[i] * Rat(p[i]);
    if (!res.optimum || val < *res.optimum) {
      res.optimum = val;
      res.argmins.clear();
    }
    if (val == *res.optimum) res.argmins.push_back(p);
  }
  if (!res.exhaustive && res.optimum) {
    // an integer-valued objective meeting the rational infimum's ceiling
    // cannot be improved outside the cap ball
    bool integral = std::all_of(objective.begin(), objective.end(), [](const Rat& q) { return is_integer(q); });
    if (integral) {
      std::optional<Rat> inf = rational_infimum(S, objective);
      if (inf && Rat(ceil_rat(*inf)) == *res.optimum) res.exhaustive = true;
    }
  }
  return res;
}

}  // namespace gkz
