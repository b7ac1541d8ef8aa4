#include "gkz/stdpairs.hpp"

#include "gkz/ineq.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gkz {

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
  MonomialIdeal M;
  M.nvars = nvars;
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw Error("generator arity does not match the ambient variable count");
  // antichain under divisibility
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
  for (const auto& g : gens) {
    bool redundant = std::any_of(M.gens.begin(), M.gens.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) M.gens.push_back(g);
  }
  std::sort(M.gens.begin(), M.gens.end());
  return M;
}

MonomialIdeal MonomialIdeal::from_binomial_ideal(const BinomialIdeal& I) {
  if (!is_monomial_ideal(I)) throw Error("ideal is not monomial");
  return from_generators(I.nvars, I.monomials);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_degree(int var) const {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g[var]);
  return d;
}

std::string StandardPair::to_string(const std::string& stem) const {
  std::ostringstream os;
  os << "(" << eta.to_string(stem) << ", {";
  for (size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i] + 1;
  os << "})";
  return os.str();
}

PairClass classify_pair(const StandardPair& p, int nvars, int m) {
  return (nvars - static_cast<int>(p.sigma.size())) == m ? PairClass::TopDimensional : PairClass::Embedded;
}

namespace {

// sigma admits standard monomials iff no generator is supported inside it
bool sigma_independent(const MonomialIdeal& M, const std::vector<char>& in_sigma) {
  for (const auto& g : M.gens) {
    bool inside = true;
    for (int i = 0; i < M.nvars && inside; ++i)
      if (g[i] > 0 && !in_sigma[i]) inside = false;
    if (inside) return false;
  }
  return true;
}

// Maximal independent sigmas by branching over the support coordinates of a
// violated generator; memoized on the forced-out set.
void maximal_sigmas(const MonomialIdeal& M, std::vector<char>& out_of_sigma, std::set<std::vector<char>>& memo,
                    std::set<std::vector<char>>& maximal) {
  if (!memo.insert(out_of_sigma).second) return;
  const Monomial* violated = nullptr;
  for (const auto& g : M.gens) {
    bool hit = false;
    for (int i = 0; i < M.nvars && !hit; ++i)
      if (g[i] > 0 && out_of_sigma[i]) hit = true;
    if (!hit && !g.is_one()) {
      violated = &g;
      break;
    }
  }
  if (!violated) {
    maximal.insert(out_of_sigma);
    return;
  }
  for (int i = 0; i < M.nvars; ++i) {
    if ((*violated)[i] == 0) continue;
    out_of_sigma[i] = 1;
    maximal_sigmas(M, out_of_sigma, memo, maximal);
    out_of_sigma[i] = 0;
  }
}

// Condition (2): the whole coset d^eta * d^sigma misses M.
bool coset_free(const MonomialIdeal& M, const Monomial& eta, const std::vector<char>& in_sigma) {
  for (const auto& g : M.gens) {
    bool covered = true;
    for (int i = 0; i < M.nvars && covered; ++i)
      if (!in_sigma[i] && eta[i] < g[i]) covered = false;
    if (covered) return false;
  }
  return true;
}

// Condition (3): every direction l outside sigma reaches M.
bool sigma_saturated(const MonomialIdeal& M, const Monomial& eta, const std::vector<char>& in_sigma) {
  for (int l = 0; l < M.nvars; ++l) {
    if (in_sigma[l]) continue;
    bool reachable = false;
    for (const auto& g : M.gens) {
      bool ok = true;
      for (int i = 0; i < M.nvars && ok; ++i)
        if (i != l && !in_sigma[i] && g[i] > eta[i]) ok = false;
      if (ok) {
        reachable = true;
        break;
      }
    }
    if (!reachable) return false;
  }
  return true;
}

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& M) {
  const int n = M.nvars;
  for (const auto& g : M.gens)
    if (g.is_one()) return {};  // unit ideal: no standard monomials

  std::set<std::vector<char>> memo, maximal;
  std::vector<char> start(n, 0);
  maximal_sigmas(M, start, memo, maximal);

  // every admissible sigma is a subset of a maximal one
  std::set<std::vector<char>> sigmas;
  for (const auto& out : maximal) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (!out[i]) members.push_back(i);
    const size_t k = members.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
      std::vector<char> in_sigma(n, 0);
      for (size_t b = 0; b < k; ++b)
        if (mask & (size_t(1) << b)) in_sigma[members[b]] = 1;
      sigmas.insert(std::move(in_sigma));
    }
  }

  std::vector<int> cap(n);
  for (int i = 0; i < n; ++i) cap[i] = std::max(M.max_degree(i) - 1, 0);

  std::set<StandardPair> out;
  for (const auto& in_sigma : sigmas) {
    if (!sigma_independent(M, in_sigma)) continue;
    std::vector<int> free_vars;
    for (int i = 0; i < n; ++i)
      if (!in_sigma[i]) free_vars.push_back(i);
    Monomial eta(n);
    std::function<void(size_t)> scan = [&](size_t pos) {
      if (pos == free_vars.size()) {
        if (coset_free(M, eta, in_sigma) && sigma_saturated(M, eta, in_sigma)) {
          std::vector<int> sig;
          for (int i = 0; i < n; ++i)
            if (in_sigma[i]) sig.push_back(i);
          out.insert(StandardPair{eta, std::move(sig)});
        }
        return;
      }
      const int v = free_vars[pos];
      for (int val = 0; val <= cap[v]; ++val) {
        eta[v] = val;
        scan(pos + 1);
      }
      eta[v] = 0;
    };
    scan(0);
  }
  return {out.begin(), out.end()};
}

std::vector<StandardPair> brute_force_standard_pairs(const MonomialIdeal& M, int box) {
  const int n = M.nvars;
  for (const auto& g : M.gens)
    for (int i = 0; i < n; ++i)
      if (g[i] > box) throw BoxTooSmall("generator exceeds the scan box");

  // staircase bitmap over [0, box]^n
  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * (box + 1);
  const size_t total = static_cast<size_t>(stride[0]) * (box + 1);
  std::vector<char> in_ideal(total, 0);
  {
    Monomial m(n);
    std::function<void(int)> fill = [&](int pos) {
      if (pos == n) {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) idx += static_cast<size_t>(m[i]) * stride[i];
        in_ideal[idx] = M.contains(m) ? 1 : 0;
        return;
      }
      for (int v = 0; v <= box; ++v) {
        m[pos] = v;
        fill(pos + 1);
      }
      m[pos] = 0;
    };
    fill(0);
  }
  auto lookup = [&](const Monomial& m) {
    size_t idx = 0;
    for (int i = 0; i < n; ++i) idx += static_cast<size_t>(m[i]) * stride[i];
    return in_ideal[idx] != 0;
  };

  std::set<StandardPair> out;
  for (size_t smask = 0; smask < (size_t(1) << n); ++smask) {
    std::vector<int> sigma, freev;
    for (int i = 0; i < n; ++i)
      (smask & (size_t(1) << i)) ? sigma.push_back(i) : freev.push_back(i);

    Monomial eta(n);
    std::function<void(size_t)> scan_eta = [&](size_t pos) {
      if (pos == freev.size()) {
        // condition (2) scanned over the box
        Monomial probe = eta;
        bool free_coset = true;
        std::function<void(size_t)> scan_mu = [&](size_t p) {
          if (!free_coset) return;
          if (p == sigma.size()) {
            if (lookup(probe)) free_coset = false;
            return;
          }
          for (int v = 0; v <= box && free_coset; ++v) {
            probe[sigma[p]] = v;
            scan_mu(p + 1);
          }
          probe[sigma[p]] = 0;
        };
        scan_mu(0);
        if (!free_coset) return;
        // condition (3) scanned over the box
        for (int l : freev) {
          bool reach = false;
          Monomial probe2 = eta;
          std::function<void(size_t)> scan_mu2 = [&](size_t p) {
            if (reach) return;
            if (p == sigma.size() + 1) {
              if (lookup(probe2)) reach = true;
              return;
            }
            const int var = p < sigma.size() ? sigma[p] : l;
            const int base = p < sigma.size() ? 0 : eta[l];
            for (int v = base; v <= box && !reach; ++v) {
              probe2[var] = v;
              scan_mu2(p + 1);
            }
            probe2[var] = base;
          };
          scan_mu2(0);
          if (!reach) return;
        }
        std::vector<int> sig = sigma;
        out.insert(StandardPair{eta, std::move(sig)});
        return;
      }
      const int v = freev[pos];
      for (int val = 0; val <= box; ++val) {
        eta[v] = val;
        scan_eta(pos + 1);
      }
      eta[v] = 0;
    };
    scan_eta(0);
  }
  return {out.begin(), out.end()};
}

std::set<std::vector<int>> associated_primes(const MonomialIdeal& M) {
  std::set<std::vector<int>> faces;
  for (const auto& p : standard_pairs(M)) {
    std::vector<int> comp;
    size_t k = 0;
    for (int i = 0; i < M.nvars; ++i) {
      if (k < p.sigma.size() && p.sigma[k] == i)
        ++k;
      else
        comp.push_back(i);
    }
    faces.insert(std::move(comp));
  }
  return faces;
}

int degree(const MonomialIdeal& M, int m) {
  int count = 0;
  for (const auto& p : standard_pairs(M))
    if (classify_pair(p, M.nvars, m) == PairClass::TopDimensional) ++count;
  return count;
}

bool check_chain_property(const MonomialIdeal& M) {
  auto faces = associated_primes(M);
  auto contains_subset = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (const auto& p : faces) {
    bool embedded = std::any_of(faces.begin(), faces.end(), [&](const std::vector<int>& q) {
      return q.size() < p.size() && contains_subset(p, q);
    });
    if (!embedded) continue;
    bool chained = std::any_of(faces.begin(), faces.end(), [&](const std::vector<int>& q) {
      return q.size() + 1 == p.size() && contains_subset(p, q);
    });
    if (!chained) return false;
  }
  return true;
}

OracleVerdict is_standard_pair_polyhedral(const Configuration& cfg, const std::vector<Rat>& w,
                                          const StandardPair& p, long cap) {
  for (int i : p.sigma)
    if (p.eta[i] != 0) throw Error("standard pair candidate with eta nonzero on sigma");
  const int n = cfg.n(), m = cfg.m();
  const IntMatrix& B = cfg.gale();

  IneqSystem S(m);
  std::vector<char> in_sigma(n, 0);
  for (int i : p.sigma) in_sigma[i] = 1;
  std::vector<int> constrained;
  for (int j = 0; j < n; ++j) {
    if (in_sigma[j]) continue;
    std::vector<Rat> c(m);
    for (int k = 0; k < m; ++k) c[k] = Rat(B.at(j, k));
    S.add(std::move(c), Rat(p.eta[j]), "row" + std::to_string(j + 1));
    constrained.push_back(j);
  }
  {
    std::vector<Rat> c(m, Rat(0));
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j) c[k] -= w[j] * Rat(B.at(j, k));
    S.add(std::move(c), Rat(0), "weight");
  }

  LatticePointReport rep = enumerate_lattice_points(S, cap);
  const std::vector<BigInt> origin(m, BigInt(0));
  for (const auto& z : rep.points)
    if (z != origin) return OracleVerdict::No;
  if (!rep.exhaustive) return OracleVerdict::Inconclusive;

  // essentiality: removing any eta-constraint must let a new lattice point in
  bool any_inconclusive = false;
  for (size_t drop = 0; drop < constrained.size(); ++drop) {
    IneqSystem R(m);
    for (size_t r = 0; r < S.rows.size(); ++r)
      if (r != drop) R.rows.push_back(S.rows[r]);
    LatticePointReport rrep = enumerate_lattice_points(R, cap);
    bool found = std::any_of(rrep.points.begin(), rrep.points.end(),
                             [&](const std::vector<BigInt>& z) { return z != origin; });
    if (found) continue;
    if (rrep.exhaustive) return OracleVerdict::No;  // certainly inessential
    any_inconclusive = true;
  }
  return any_inconclusive ? OracleVerdict::Inconclusive : OracleVerdict::Yes;
}

}  // namespace gkz
