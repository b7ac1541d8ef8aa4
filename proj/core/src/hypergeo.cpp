#include "gkz/hypergeo.hpp"

#include "gkz/ineq.hpp"
#include "gkz/linsolve.hpp"
#include "gkz/volume.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gkz {

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "yes";
    case TriState::No:
      return "no";
    default:
      return "inconclusive-at-cap";
  }
}

std::string to_string(CmVerdict v) {
  switch (v) {
    case CmVerdict::CM:
      return "cohen-macaulay";
    case CmVerdict::NotCM:
      return "not-cohen-macaulay";
    default:
      return "not-applicable";
  }
}

std::vector<int> negative_support(const RFVec& v) {
  std::vector<int> ns;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i].is_negative_integer_constant()) ns.push_back(static_cast<int>(i));
  return ns;
}

RFVec apply_matrix(const IntMatrix& A, const RFVec& v) {
  if (static_cast<size_t>(A.cols()) != v.size()) throw Error("matrix-vector shape mismatch");
  RFVec out(A.rows(), RatFunc(0));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (A.at(i, j) != 0) out[i] += RatFunc(Rat(A.at(i, j))) * v[j];
  return out;
}

namespace {

bool rf_vec_less(const RFVec& a, const RFVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// integer value of a constant-integer entry
BigInt int_value(const RatFunc& f) {
  auto c = f.constant_value();
  return numerator(*c);
}

RFVec add_integer_vec(const RFVec& v, const std::vector<BigInt>& u) {
  RFVec out = v;
  for (size_t i = 0; i < out.size(); ++i) out[i] += RatFunc(Rat(u[i]));
  return out;
}

std::vector<BigInt> gale_times(const IntMatrix& B, const std::vector<BigInt>& z) {
  std::vector<BigInt> u(B.rows(), BigInt(0));
  for (int i = 0; i < B.rows(); ++i)
    for (int k = 0; k < B.cols(); ++k) u[i] += B.at(i, k) * z[k];
  return u;
}

// true iff every coordinate difference a_i - b_i is a constant integer
bool integer_translate(const RFVec& a, const RFVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] - b[i]).is_integer_constant()) return false;
  return true;
}

}  // namespace

FakeExponentResult fake_exponents_for_pairs(const Configuration& cfg, const RFVec& beta,
                                            const std::vector<StandardPair>& pairs, long cap) {
  const IntMatrix& A = cfg.matrix();
  const int d = cfg.d(), n = cfg.n();
  if (static_cast<int>(beta.size()) != d) throw Error("beta length mismatch");

  FakeExponentResult res;
  std::vector<FakeExponent> found;
  for (const auto& p : pairs) {
    std::vector<char> in_sigma(n, 0);
    for (int i : p.sigma) in_sigma[i] = 1;
    // theta_i = eta_i off sigma; A theta = beta determines the sigma slots
    std::vector<std::vector<RatFunc>> M(d, std::vector<RatFunc>(p.sigma.size(), RatFunc(0)));
    std::vector<RatFunc> rhs(d, RatFunc(0));
    for (int r = 0; r < d; ++r) {
      rhs[r] = beta[r];
      for (int j = 0; j < n; ++j)
        if (!in_sigma[j] && p.eta[j] != 0) rhs[r] -= RatFunc(Rat(A.at(r, j) * p.eta[j]));
      for (size_t c = 0; c < p.sigma.size(); ++c) M[r][c] = RatFunc(Rat(A.at(r, p.sigma[c])));
    }
    auto sol = solve_affine<RatFunc>(M, rhs);
    if (sol.kind == SolveKind::Underdetermined)
      throw DegeneratePair("standard pair " + p.to_string() + " yields an underdetermined exponent system");
    if (sol.kind == SolveKind::Inconsistent) {
      // roots of the residuals are the alpha values that would rescue this pair
      for (const auto& g : sol.residuals) {
        for (const auto& root : rational_roots(g)) {
          bool all_vanish = true;
          for (const auto& h : sol.residuals) {
            try {
              if (h.eval(root) != 0) all_vanish = false;
            } catch (const ZeroDenominator&) {
              all_vanish = false;
            }
            if (!all_vanish) break;
          }
          if (all_vanish &&
              std::find(res.consistency_degenerations.begin(), res.consistency_degenerations.end(), root) ==
                  res.consistency_degenerations.end())
            res.consistency_degenerations.push_back(root);
        }
      }
      continue;
    }
    RFVec v(n, RatFunc(0));
    for (int j = 0; j < n; ++j)
      if (!in_sigma[j]) v[j] = RatFunc(Rat(p.eta[j]));
    for (size_t c = 0; c < p.sigma.size(); ++c) v[p.sigma[c]] = sol.solution[c];
    FakeExponent fe;
    fe.v = std::move(v);
    fe.source = p;
    fe.nsupp = negative_support(fe.v);
    fe.minimal = has_minimal_negative_support(cfg, fe.v, cap);
    found.push_back(std::move(fe));
  }
  std::sort(found.begin(), found.end(),
            [](const FakeExponent& a, const FakeExponent& b) { return rf_vec_less(a.v, b.v); });
  for (auto& fe : found) {
    if (!res.exponents.empty() && res.exponents.back().v == fe.v) continue;  // keep first source
    res.exponents.push_back(std::move(fe));
  }
  std::sort(res.consistency_degenerations.begin(), res.consistency_degenerations.end());
  return res;
}

FakeExponentResult fake_exponents(const Configuration& cfg, const RFVec& beta, const std::vector<Rat>& w,
                                  long cap) {
  BinomialIdeal ini = initial_ideal(cfg, w);
  if (!is_monomial_ideal(ini)) throw Error("weight vector is not generic: initial ideal is not monomial");
  MonomialIdeal M = MonomialIdeal::from_binomial_ideal(ini);
  return fake_exponents_for_pairs(cfg, beta, standard_pairs(M), cap);
}

TriState has_minimal_negative_support(const Configuration& cfg, const RFVec& v, long cap) {
  const IntMatrix& B = cfg.gale();
  const int n = cfg.n(), m = cfg.m();
  std::vector<int> ns = negative_support(v);
  if (ns.empty()) return TriState::Yes;
  std::vector<char> in_ns(n, 0);
  for (int i : ns) in_ns[i] = 1;

  bool inconclusive = false;
  for (int j : ns) {
    // lattice z with nsupp(v - B z) inside nsupp(v) and index j escaping
    IneqSystem S(m);
    for (int i = 0; i < n; ++i) {
      bool constrain = (i == j) || (v[i].is_integer_constant() && !in_ns[i]);
      if (!constrain) continue;
      std::vector<Rat> c(m);
      for (int k = 0; k < m; ++k) c[k] = Rat(B.at(i, k));
      S.add(std::move(c), Rat(int_value(v[i])));
    }
    LatticePointReport rep = enumerate_lattice_points(S, cap);
    if (!rep.points.empty()) return TriState::No;
    if (!rep.exhaustive) inconclusive = true;
  }
  return inconclusive ? TriState::InconclusiveAtCap : TriState::Yes;
}

TriState certify_single_term(const Configuration& cfg, const RFVec& v, long cap) {
  const IntMatrix& B = cfg.gale();
  const int n = cfg.n(), m = cfg.m();
  std::vector<int> ns = negative_support(v);
  std::vector<char> in_ns(n, 0);
  for (int i : ns) in_ns[i] = 1;
  IneqSystem S(m);
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_integer_constant()) continue;
    std::vector<Rat> c(m);
    if (in_ns[i]) {
      // stay negative: (B z)_i >= v_i + 1
      for (int k = 0; k < m; ++k) c[k] = Rat(-B.at(i, k));
      S.add(std::move(c), Rat(-(int_value(v[i]) + 1)));
    } else {
      for (int k = 0; k < m; ++k) c[k] = Rat(B.at(i, k));
      S.add(std::move(c), Rat(int_value(v[i])));
    }
  }
  LatticePointReport rep = enumerate_lattice_points(S, cap);
  const std::vector<BigInt> origin(m, BigInt(0));
  for (const auto& z : rep.points)
    if (z != origin) return TriState::No;
  return rep.exhaustive ? TriState::Yes : TriState::InconclusiveAtCap;
}

TruncatedSeries canonical_series(const Configuration& cfg, const RFVec& v, long radius) {
  const IntMatrix& B = cfg.gale();
  const int m = cfg.m();
  TruncatedSeries s;
  s.base = v;
  s.radius = radius;
  std::vector<int> ns = negative_support(v);

  std::vector<BigInt> z(m, BigInt(0));
  std::function<void(int)> scan = [&](int pos) {
    if (pos == m) {
      std::vector<BigInt> u = gale_times(B, z);
      RFVec expo = add_integer_vec(v, u);
      if (negative_support(expo) != ns) return;
      RatFunc numf(1), denf(1);
      for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0) {
          for (BigInt j = 1; j <= -u[i]; ++j) numf *= v[i] - RatFunc(Rat(j - 1));
        } else if (u[i] > 0) {
          for (BigInt j = 1; j <= u[i]; ++j) denf *= v[i] + RatFunc(Rat(j));
        }
      }
      if (denf.is_zero())
        throw ZeroDenominator("vanishing series denominator at kernel offset; exponent is not valid");
      s.terms.push_back(SeriesTerm{z, std::move(expo), numf / denf});
      return;
    }
    for (BigInt t = -radius; t <= radius; ++t) {
      z[pos] = t;
      scan(pos + 1);
    }
    z[pos] = 0;
  };
  scan(0);
  std::sort(s.terms.begin(), s.terms.end(), [](const SeriesTerm& a, const SeriesTerm& b) { return a.z < b.z; });
  return s;
}

std::string series_to_string(const TruncatedSeries& s) {
  // base term first, then the others in stored order
  std::vector<const SeriesTerm*> order;
  const std::vector<BigInt> zero(s.base.size() ? s.terms.empty() ? 0 : s.terms[0].z.size() : 0, BigInt(0));
  const SeriesTerm* base = nullptr;
  for (const auto& t : s.terms) {
    bool is_base = std::all_of(t.z.begin(), t.z.end(), [](const BigInt& v) { return v == 0; });
    if (is_base)
      base = &t;
    else
      order.push_back(&t);
  }
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const SeriesTerm& t) {
    if (!first) os << " + ";
    first = false;
    bool unit_coeff = (t.coeff == RatFunc(1));
    std::string cs = t.coeff.to_string();
    bool needs_paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    std::string body;
    for (size_t i = 0; i < t.exponent.size(); ++i) {
      const RatFunc& e = t.exponent[i];
      if (e.is_zero()) continue;
      if (!body.empty()) body += " ";
      body += "x" + std::to_string(i + 1);
      if (e == RatFunc(1)) continue;
      std::string es = e.to_string();
      bool atom = es.find(' ') == std::string::npos && es.find('/') == std::string::npos;
      body += "^" + (atom ? es : "(" + es + ")");
    }
    if (body.empty()) body = "1";
    if (unit_coeff)
      os << body;
    else
      os << (needs_paren ? "(" + cs + ")" : cs) << " " << body;
  };
  if (base) emit(*base);
  for (const auto* t : order) emit(*t);
  if (first) os << "0";
  return os.str();
}

bool verify_solution(const Configuration& cfg, const RFVec& beta, const TruncatedSeries& s) {
  return verify_solution(cfg, beta, s, toric_ideal(cfg));
}

bool verify_solution(const Configuration& cfg, const RFVec& beta, const TruncatedSeries& s,
                     const BinomialIdeal& toric) {
  const IntMatrix& A = cfg.matrix();
  const IntMatrix& B = cfg.gale();
  const int m = cfg.m();

  // Euler operators annihilate every term exactly
  for (const auto& t : s.terms) {
    RFVec Ae = apply_matrix(A, t.exponent);
    for (int r = 0; r < cfg.d(); ++r)
      if (Ae[r] != beta[r]) return false;
  }

  std::map<std::vector<BigInt>, RatFunc> coeff;
  for (const auto& t : s.terms) coeff[t.z] = t.coeff;
  auto coeff_at = [&](const std::vector<BigInt>& z) {
    auto it = coeff.find(z);
    return it == coeff.end() ? RatFunc(0) : it->second;
  };
  auto falling = [&](const RFVec& mu, const Monomial& e) {
    RatFunc f(1);
    for (int i = 0; i < static_cast<int>(mu.size()); ++i)
      for (int k = 0; k < e[i]; ++k) f *= mu[i] - RatFunc(Rat(k));
    return f;
  };
  auto in_box = [&](const std::vector<BigInt>& z) {
    for (const auto& c : z)
      if (c > s.radius || c < -s.radius) return false;
    return true;
  };

  for (const auto& b : toric.binomials) {
    // z0 with B z0 = plus - minus
    std::vector<std::vector<Rat>> M(cfg.n(), std::vector<Rat>(m));
    std::vector<Rat> rhs(cfg.n());
    for (int i = 0; i < cfg.n(); ++i) {
      for (int k = 0; k < m; ++k) M[i][k] = Rat(B.at(i, k));
      rhs[i] = Rat(b.plus[i] - b.minus[i]);
    }
    auto sol = solve_affine<Rat>(M, rhs);
    if (sol.kind != SolveKind::Unique) throw InternalInvariant("toric generator outside the kernel lattice");
    std::vector<BigInt> z0(m);
    for (int k = 0; k < m; ++k) {
      if (!is_integer(sol.solution[k])) throw InternalInvariant("non-integer kernel coordinates");
      z0[k] = numerator(sol.solution[k]);
    }
    // slot ledger: a-branch term z pairs with b-branch term z - z0. Slots
    // where both coefficients vanish are identically zero, so only the
    // terms' own positions and their z0-shifts need checking.
    std::set<std::vector<BigInt>> slots;
    for (const auto& t : s.terms) {
      slots.insert(t.z);
      std::vector<BigInt> shifted(m);
      for (int k = 0; k < m; ++k) shifted[k] = t.z[k] + z0[k];
      slots.insert(std::move(shifted));
    }
    for (const auto& z : slots) {
      if (!in_box(z)) continue;
      std::vector<BigInt> zb(m);
      for (int k = 0; k < m; ++k) zb[k] = z[k] - z0[k];
      if (!in_box(zb)) continue;
      RFVec mu_a = add_integer_vec(s.base, gale_times(B, z));
      RFVec mu_b = add_integer_vec(s.base, gale_times(B, zb));
      RatFunc val = coeff_at(z) * falling(mu_a, b.plus) - coeff_at(zb) * falling(mu_b, b.minus);
      if (!val.is_zero()) return false;
    }
  }
  return true;
}

namespace {

RFVec eta_plus(const StandardPair& pair, const RFVec& alpha) {
  RFVec v = alpha;
  for (size_t i = 0; i < v.size(); ++i) v[i] += RatFunc(Rat(pair.eta[static_cast<int>(i)]));
  return v;
}

// Observation: reversing the weight inequality (B z)_1 <= 0 of the pair's
// polytope must give a bounded set, or the first Gale row coincides (up to a
// negative multiple) with exactly one other constrained row whose eta entry
// is positive.
bool passes_weight_reversal(const Configuration& cfg, const StandardPair& pair) {
  const IntMatrix& B = cfg.gale();
  const int n = cfg.n(), m = cfg.m();
  std::vector<char> in_sigma(n, 0);
  for (int i : pair.sigma) in_sigma[i] = 1;
  IneqSystem R(m);
  for (int j = 0; j < n; ++j) {
    if (in_sigma[j]) continue;
    std::vector<Rat> c(m);
    for (int k = 0; k < m; ++k) c[k] = Rat(B.at(j, k));
    R.add(std::move(c), Rat(pair.eta[j]));
  }
  {
    // reversed weight inequality: (B z)_1 >= 0
    std::vector<Rat> c(m);
    for (int k = 0; k < m; ++k) c[k] = Rat(-B.at(0, k));
    R.add(std::move(c), Rat(0));
  }
  if (is_bounded(R)) return true;

  // coincident-hyperplane escape
  std::vector<int> coincident;
  for (int r = 1; r < n; ++r) {
    if (in_sigma[r]) continue;
    // row r = negative multiple of row 0
    bool zero0 = true, zeror = true;
    for (int k = 0; k < m; ++k) {
      if (B.at(0, k) != 0) zero0 = false;
      if (B.at(r, k) != 0) zeror = false;
    }
    if (zero0 || zeror) continue;
    std::optional<Rat> ratio;
    bool proportional = true;
    for (int k = 0; k < m && proportional; ++k) {
      const BigInt &a = B.at(r, k), &b0 = B.at(0, k);
      if (b0 == 0) {
        if (a != 0) proportional = false;
        continue;
      }
      Rat q = Rat(a) / Rat(b0);
      if (!ratio)
        ratio = q;
      else if (*ratio != q)
        proportional = false;
    }
    if (proportional && ratio && *ratio < 0) coincident.push_back(r);
  }
  if (coincident.size() > 1)
    throw CoincidentRows("multiple Gale rows coincide with the pivot row; construction is unspecified here");
  return coincident.size() == 1 && pair.eta[coincident[0]] > 0;
}

RFVec permute_vec(const RFVec& v, const std::vector<int>& perm) {
  // result[j] = v[perm[j]]
  RFVec out(v.size());
  for (size_t j = 0; j < v.size(); ++j) out[j] = v[perm[j]];
  return out;
}

RFVec unpermute_vec(const RFVec& v, const std::vector<int>& perm) {
  // inverse of permute_vec: out[perm[j]] = v[j]
  RFVec out(v.size());
  for (size_t j = 0; j < v.size(); ++j) out[perm[j]] = v[j];
  return out;
}

StandardPair unpermute_pair(const StandardPair& p, const std::vector<int>& perm) {
  StandardPair q;
  q.eta = Monomial(static_cast<int>(perm.size()));
  for (size_t j = 0; j < perm.size(); ++j) q.eta[perm[j]] = p.eta[static_cast<int>(j)];
  for (int s : p.sigma) q.sigma.push_back(perm[s]);
  std::sort(q.sigma.begin(), q.sigma.end());
  return q;
}

FakeExponent unpermute_exponent(const FakeExponent& fe, const std::vector<int>& perm) {
  FakeExponent out;
  out.v = unpermute_vec(fe.v, perm);
  out.source = unpermute_pair(fe.source, perm);
  out.minimal = fe.minimal;
  for (int i : fe.nsupp) out.nsupp.push_back(perm[i]);
  std::sort(out.nsupp.begin(), out.nsupp.end());
  return out;
}

struct PivotAnalysis {
  Configuration cfg;
  std::vector<Rat> weight;
  bool refined = false;
  BinomialIdeal initial_e1;
  MonomialIdeal inw;
  std::vector<StandardPair> pairs;
};

PivotAnalysis analyze_pivot(const Configuration& cfgP) {
  PivotAnalysis an{cfgP, {}, false, BinomialIdeal(cfgP.n()), MonomialIdeal{}, {}};
  std::vector<Rat> e1(cfgP.n(), Rat(0));
  e1[0] = Rat(-1);
  BinomialIdeal IA = toric_ideal(cfgP);
  BinomialIdeal G1 = buchberger(IA, TermOrder::weighted(e1));
  an.initial_e1 = minimal_generators(initial_forms(G1, e1));
  if (is_monomial_ideal(an.initial_e1)) {
    an.weight = e1;
    an.inw = MonomialIdeal::from_binomial_ideal(an.initial_e1);
  } else {
    an.refined = true;
    an.weight = default_refined_weight(cfgP, 0);
    BinomialIdeal Gw = buchberger(IA, TermOrder::weighted(an.weight));
    BinomialIdeal iw = minimal_generators(initial_forms(Gw, an.weight));
    if (!is_monomial_ideal(iw)) throw InternalInvariant("grevlex refinement failed to produce a monomial ideal");
    an.inw = MonomialIdeal::from_binomial_ideal(iw);
  }
  an.pairs = standard_pairs(an.inw);
  return an;
}

}  // namespace

std::optional<EmbeddedSelection> select_embedded_pair(const Configuration& cfg, long cap) {
  const int n = cfg.n(), d = cfg.d(), m = cfg.m();
  (void)cap;
  for (int pivot = 0; pivot < n; ++pivot) {
    std::vector<int> perm0;
    perm0.push_back(pivot);
    for (int j = 0; j < n; ++j)
      if (j != pivot) perm0.push_back(j);
    Configuration cfgP = cfg.permuted(perm0);
    PivotAnalysis an = analyze_pivot(cfgP);

    std::vector<StandardPair> candidates;
    for (const auto& p : an.pairs) {
      if (static_cast<int>(p.sigma.size()) != d - 1) continue;
      if (std::find(p.sigma.begin(), p.sigma.end(), 0) == p.sigma.end()) continue;
      candidates.push_back(p);
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& cand : candidates) {
      if (!passes_weight_reversal(cfgP, cand)) continue;

      // translate-maximality: among same-sigma pairs reachable by an integer
      // negative step of the weight functional, take the highest one
      StandardPair chosen = cand;
      {
        const IntMatrix& B = cfgP.gale();
        std::vector<char> in_sigma(n, 0);
        for (int i : cand.sigma) in_sigma[i] = 1;
        std::optional<Rat> best;
        for (const auto& q : an.pairs) {
          if (q.sigma != cand.sigma) continue;
          std::vector<std::vector<Rat>> Meq;
          std::vector<Rat> rhs;
          for (int i = 0; i < n; ++i) {
            if (in_sigma[i] || i == 0) continue;
            std::vector<Rat> row(m);
            for (int k = 0; k < m; ++k) row[k] = Rat(B.at(i, k));
            Meq.push_back(std::move(row));
            rhs.push_back(Rat(cand.eta[i] - q.eta[i]));
          }
          auto sol = solve_affine<Rat>(Meq, rhs);
          if (sol.kind != SolveKind::Unique) continue;
          Rat by0(0);
          for (int k = 0; k < m; ++k) by0 += Rat(B.at(0, k)) * sol.solution[k];
          if (!is_integer(by0) || by0 >= 0) continue;
          if (!best || by0 > *best) {
            best = by0;
            chosen = q;
          }
        }
      }

      // move tau to the tail positions m+2 .. n-1
      std::vector<int> tau_now;
      for (int s : chosen.sigma)
        if (s != 0) tau_now.push_back(s);
      std::vector<int> perm1;
      perm1.push_back(0);
      for (int j = 1; j < n; ++j)
        if (std::find(tau_now.begin(), tau_now.end(), j) == tau_now.end()) perm1.push_back(j);
      for (int t : tau_now) perm1.push_back(t);

      std::vector<int> perm(n);
      for (int j = 0; j < n; ++j) perm[j] = perm0[perm1[j]];
      Configuration cfgF = cfg.permuted(perm);
      PivotAnalysis anF = analyze_pivot(cfgF);

      // the chosen pair in final coordinates
      std::vector<int> inv(n);
      for (int j = 0; j < n; ++j) inv[perm1[j]] = j;
      StandardPair pairF;
      pairF.eta = Monomial(n);
      for (int j = 0; j < n; ++j) pairF.eta[inv[j]] = chosen.eta[j];
      for (int s : chosen.sigma) pairF.sigma.push_back(inv[s]);
      std::sort(pairF.sigma.begin(), pairF.sigma.end());
      if (std::find(anF.pairs.begin(), anF.pairs.end(), pairF) == anF.pairs.end())
        throw InternalInvariant("selected pair vanished under the tau permutation");

      EmbeddedSelection sel(cfgF);
      sel.pivot = pivot;
      sel.perm = perm;
      sel.pair = pairF;
      for (int j = m + 2; j < n; ++j) sel.tau.push_back(j);
      sel.weight = anF.weight;
      sel.refined = anF.refined;
      sel.initial_e1 = anF.initial_e1;
      sel.inw = anF.inw;
      sel.pairs = anF.pairs;
      return sel;
    }
  }
  return std::nullopt;
}

AlphaAssignment sample_alpha(const EmbeddedSelection& sel, std::uint64_t seed, long cap) {
  const int n = sel.cfg.n();
  AlphaAssignment as;
  as.alpha.assign(n, RatFunc(0));
  if (sel.tau.empty()) return as;  // d = 2: nothing to sample, vacuous genericity

  as.symbolic_slot = sel.tau.back();  // lexicographically last tau index
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  const int dens[4] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> den_dist(0, 3);

  const int kRetryBudget = 32;
  std::string last_violation;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    as.retries = attempt;
    as.fixed.clear();
    as.alpha.assign(n, RatFunc(0));
    as.alpha[as.symbolic_slot] = RatFunc::alpha();
    bool draw_ok = true;
    for (size_t t = 0; t + 1 < sel.tau.size(); ++t) {
      Rat val;
      int guard = 0;
      do {
        val = Rat(num_dist(rng)) / Rat(dens[den_dist(rng)]);
        if (++guard > 64) {
          draw_ok = false;
          break;
        }
      } while (is_integer(val));
      if (!draw_ok) break;
      as.alpha[sel.tau[t]] = RatFunc(val);
      as.fixed.emplace_back(sel.tau[t], val);
    }
    if (!draw_ok) continue;

    RFVec beta_prime = apply_matrix(sel.cfg.matrix(), eta_plus(sel.pair, as.alpha));
    FakeExponentResult F = fake_exponents_for_pairs(sel.cfg, beta_prime, sel.pairs, cap);

    as.excluded_consistency = F.consistency_degenerations;
    as.excluded_zero_first.clear();
    for (const auto& fe : F.exponents) {
      if (fe.v[0].is_zero()) continue;
      for (const auto& r : rational_roots(fe.v[0]))
        if (std::find(as.excluded_zero_first.begin(), as.excluded_zero_first.end(), r) ==
            as.excluded_zero_first.end())
          as.excluded_zero_first.push_back(r);
    }
    std::sort(as.excluded_zero_first.begin(), as.excluded_zero_first.end());

    // (a) zero-first-coordinate exponents carry integers only off tau
    bool ok = true;
    for (const auto& fe : F.exponents) {
      if (!fe.v[0].is_zero()) continue;
      for (int i : sel.tau) {
        if (fe.v[i].is_integer_constant()) {
          ok = false;
          last_violation = "integer tau entry in a zero-first-coordinate fake exponent";
          break;
        }
      }
      if (!ok) break;
    }
    // (b) integer translates of kernel exponents keep the first coordinate
    // out of the negative support
    if (ok) {
      std::vector<const FakeExponent*> Kc, Fm;
      for (const auto& fe : F.exponents) {
        if (fe.minimal != TriState::Yes) continue;
        Fm.push_back(&fe);
        if (fe.v[0].is_zero()) Kc.push_back(&fe);
      }
      for (const auto* u : Kc) {
        for (const auto* v : Fm) {
          if (!integer_translate(v->v, u->v)) continue;
          if (std::find(v->nsupp.begin(), v->nsupp.end(), 0) != v->nsupp.end()) {
            ok = false;
            last_violation = "integer translate of a kernel exponent has the pivot in its negative support";
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok) return as;
  }
  throw GenericityExhausted("alpha sampling failed after retry budget: " + last_violation);
}

KernelResult kernel_K(const Configuration& cfg, const RFVec& beta_prime, const std::vector<Rat>& w, long cap) {
  KernelResult res;
  FakeExponentResult F = fake_exponents(cfg, beta_prime, w, cap);
  for (const auto& fe : F.exponents) {
    if (!fe.v[0].is_zero()) continue;
    if (fe.minimal == TriState::InconclusiveAtCap) {
      res.inconclusive = true;
      res.warnings.push_back("minimality inconclusive at cap for " + rfvec_to_string(fe.v));
      continue;
    }
    if (fe.minimal == TriState::No) continue;
    FakeExponent u = fe;
    TriState mono = certify_single_term(cfg, u.v, cap);
    if (mono == TriState::No) {
      res.inconclusive = true;
      res.warnings.push_back("kernel exponent " + rfvec_to_string(u.v) + " failed the one-term certificate");
      continue;
    }
    if (mono == TriState::InconclusiveAtCap) {
      res.inconclusive = true;
      res.warnings.push_back("one-term certificate capped for " + rfvec_to_string(u.v));
    }
    res.K.push_back(std::move(u));
  }
  return res;
}

WitnessResult cokernel_witnesses(const EmbeddedSelection& sel, const AlphaAssignment& alpha,
                                 const std::vector<FakeExponent>& K, const RFVec& beta, long cap) {
  WitnessResult res;
  const Configuration& cfg = sel.cfg;
  const IntMatrix& B = cfg.gale();
  const int n = cfg.n(), m = cfg.m();

  FakeExponentResult Fb = fake_exponents_for_pairs(cfg, beta, sel.pairs, cap);
  auto find_in_Fb = [&](const RFVec& v) -> const FakeExponent* {
    for (const auto& fe : Fb.exponents)
      if (fe.v == v) return &fe;
    return nullptr;
  };

  std::vector<FakeExponent> out;
  auto admit = [&](const RFVec& v, const std::vector<int>& expected_ns, const char* kind) {
    const FakeExponent* fe = find_in_Fb(v);
    if (!fe) {
      res.warnings.push_back(std::string(kind) + " candidate " + rfvec_to_string(v) +
                             " is not a fake exponent of the target parameter");
      return false;
    }
    if (fe->minimal != TriState::Yes) {
      res.warnings.push_back(std::string(kind) + " candidate " + rfvec_to_string(v) +
                             " lacks certified minimal negative support");
      return false;
    }
    if (fe->nsupp != expected_ns) {
      res.warnings.push_back(std::string(kind) + " candidate " + rfvec_to_string(v) +
                             " has unexpected negative support");
      return false;
    }
    for (const auto& w : out)
      if (w.v == v) return false;  // already admitted
    out.push_back(*fe);
    return true;
  };

  // the u - e_1 family
  for (const auto& u : K) {
    RFVec v = u.v;
    v[0] -= RatFunc(1);
    std::vector<int> ns = u.nsupp;
    ns.insert(ns.begin(), 0);
    admit(v, ns, "kernel-shift");
  }

  // one extra witness per bounded search direction
  RFVec base = eta_plus(sel.pair, alpha.alpha);
  base[0] -= RatFunc(1);  // eta + alpha - e_1
  const Monomial& eta = sel.pair.eta;
  for (int i = 1; i < m + 2 && i < n; ++i) {
    IneqSystem S(m);
    {
      std::vector<Rat> c(m);
      for (int k = 0; k < m; ++k) c[k] = Rat(B.at(0, k));
      S.add(std::move(c), Rat(-1));  // (B z)_1 <= -1
    }
    for (int j = 1; j < m + 2 && j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> c(m);
      for (int k = 0; k < m; ++k) c[k] = Rat(B.at(j, k));
      S.add(std::move(c), Rat(eta[j]));
    }
    {
      std::vector<Rat> c(m);
      for (int k = 0; k < m; ++k) c[k] = Rat(-B.at(i, k));
      S.add(std::move(c), Rat(-(eta[i] + 1)));  // (B z)_i >= eta_i + 1
    }
    std::vector<Rat> objective(m);
    for (int k = 0; k < m; ++k) objective[k] = Rat(B.at(0, k));
    LatticeMinResult opt = minimize_on_lattice(S, objective, cap);
    if (!opt.bounded_objective) continue;  // the functional is not maximized here
    if (!opt.optimum) {
      if (!opt.exhaustive) res.search_inconclusive = true;
      continue;
    }
    if (!opt.exhaustive) res.search_inconclusive = true;
    for (const auto& z : opt.argmins) {
      std::vector<BigInt> u = gale_times(B, z);
      RFVec v = base;
      for (int j2 = 0; j2 < n; ++j2) v[j2] -= RatFunc(Rat(u[j2]));
      if (admit(v, {i}, "extra")) ++res.extra_count;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const FakeExponent& a, const FakeExponent& b) { return rf_vec_less(a.v, b.v); });
  res.witnesses = std::move(out);
  if (res.extra_count > 0) res.search_inconclusive = false;
  return res;
}

RankCertificate rank_certificate(const Configuration& cfg, std::uint64_t seed, long cap, long radius) {
  RankCertificate cert;
  cert.vol = normalized_volume(cfg.matrix());
  cert.asserted_lower_bound = cert.vol;
  cert.headline_lower_bound = cert.vol;

  auto sel = select_embedded_pair(cfg, cap);
  if (!sel) {
    cert.no_embedded_pair = true;
    return cert;
  }
  cert.selection = sel;
  cert.alpha = sample_alpha(*sel, seed, cap);

  RFVec eta_alpha = eta_plus(sel->pair, cert.alpha.alpha);
  cert.beta_prime = apply_matrix(sel->cfg.matrix(), eta_alpha);
  RFVec base = eta_alpha;
  base[0] -= RatFunc(1);
  cert.beta = apply_matrix(sel->cfg.matrix(), base);
  cert.eta_alpha_me1 = unpermute_vec(base, sel->perm);

  KernelResult K = kernel_K(sel->cfg, cert.beta_prime, sel->weight, cap);
  for (const auto& w : K.warnings) cert.warnings.push_back(w);
  WitnessResult W = cokernel_witnesses(*sel, cert.alpha, K.K, cert.beta, cap);
  for (const auto& w : W.warnings) cert.warnings.push_back(w);

  cert.kernel_dim = static_cast<int>(K.K.size());
  cert.extra_span_dim = 1 + W.extra_count;

  BinomialIdeal IA = toric_ideal(sel->cfg);
  bool series_ok = true;
  for (const auto& u : K.K) {
    TruncatedSeries s = canonical_series(sel->cfg, u.v, radius);
    if (!verify_solution(sel->cfg, cert.beta_prime, s, IA)) {
      series_ok = false;
      cert.warnings.push_back("kernel series failed verification: " + rfvec_to_string(u.v));
    }
  }
  for (const auto& w : W.witnesses) {
    TruncatedSeries s = canonical_series(sel->cfg, w.v, radius);
    if (!verify_solution(sel->cfg, cert.beta, s, IA)) {
      series_ok = false;
      cert.warnings.push_back("witness series failed verification: " + rfvec_to_string(w.v));
    }
  }

  FakeExponentResult Fb = fake_exponents_for_pairs(sel->cfg, cert.beta, sel->pairs, cap);
  cert.logfree_count_beta = static_cast<int>(std::count_if(
      Fb.exponents.begin(), Fb.exponents.end(), [](const FakeExponent& f) { return f.minimal == TriState::Yes; }));

  cert.jump_proven = series_ok && !K.inconclusive && !W.search_inconclusive &&
                     static_cast<int>(W.witnesses.size()) >= cert.kernel_dim + 1 &&
                     std::all_of(W.witnesses.begin(), W.witnesses.end(),
                                 [](const FakeExponent& w) { return w.minimal == TriState::Yes; });
  if (W.search_inconclusive)
    cert.warnings.push_back("extra-witness search hit the lattice cap; rank jump not certified");
  cert.asserted_lower_bound = cert.vol + (cert.jump_proven ? 1 : 0);
  cert.headline_lower_bound = cert.asserted_lower_bound;
  if (BigInt(cert.logfree_count_beta) > cert.headline_lower_bound)
    cert.headline_lower_bound = cert.logfree_count_beta;

  for (const auto& u : K.K) cert.K.push_back(unpermute_exponent(u, sel->perm));
  for (const auto& w : W.witnesses) cert.witnesses.push_back(unpermute_exponent(w, sel->perm));
  return cert;
}

CmVerdict is_cohen_macaulay_generic(const Configuration& cfg) {
  if (!is_generic(cfg)) return CmVerdict::NotApplicable;
  BinomialIdeal IA = toric_ideal(cfg);
  for (int i = 0; i < cfg.n(); ++i) {
    std::vector<Rat> w(cfg.n(), Rat(0));
    w[i] = Rat(-1);
    BinomialIdeal G = buchberger(IA, TermOrder::weighted(w));
    BinomialIdeal ini = minimal_generators(initial_forms(G, w));
    if (!is_monomial_ideal(ini))
      throw InternalInvariant("reverse-lexicographic initial ideal of a generic toric ideal is not monomial");
    MonomialIdeal M = MonomialIdeal::from_binomial_ideal(ini);
    for (const auto& p : standard_pairs(M)) {
      if (classify_pair(p, cfg.n(), cfg.m()) == PairClass::Embedded) return CmVerdict::NotCM;
    }
  }
  return CmVerdict::CM;
}

}  // namespace gkz
