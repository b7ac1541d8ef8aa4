#include "gkz/volume.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace gkz {

namespace {

// det of the d x d matrix whose columns are the chosen points
BigInt simplex_det(const IntMatrix& A, const std::vector<int>& verts) {
  const int d = A.rows();
  IntMatrix S(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) S.at(i, j) = A.at(i, verts[j]);
  return det(S);
}

}  // namespace

BigInt normalized_volume(const IntMatrix& A) {
  const int d = A.rows(), n = A.cols();
  if (rank(A) < d) throw DegenerateConfiguration("convex hull has dimension below d-1");
  if (d == 1) return 1;  // a single point in the hyperplane x1 = 1

  // initial full-dimensional simplex, greedy in column order
  std::vector<int> init;
  std::vector<int> used(n, 0);
  for (int j = 0; j < n && static_cast<int>(init.size()) < d; ++j) {
    init.push_back(j);
    IntMatrix probe(d, static_cast<int>(init.size()));
    for (size_t k = 0; k < init.size(); ++k)
      for (int i = 0; i < d; ++i) probe.at(i, static_cast<int>(k)) = A.at(i, init[k]);
    if (rank(probe) < static_cast<int>(init.size()))
      init.pop_back();
    else
      used[j] = 1;
  }
  if (static_cast<int>(init.size()) < d) throw DegenerateConfiguration("no full-dimensional simplex found");

  std::vector<std::vector<int>> simplices;  // each sorted, size d
  std::sort(init.begin(), init.end());
  simplices.push_back(init);

  auto boundary_facets = [&]() {
    // facet -> the simplex vertex opposite it (for one owning simplex)
    std::map<std::vector<int>, std::pair<int, int>> count;  // facet -> (count, opposite vertex)
    for (const auto& s : simplices) {
      for (int drop = 0; drop < d; ++drop) {
        std::vector<int> f;
        f.reserve(d - 1);
        for (int i = 0; i < d; ++i)
          if (i != drop) f.push_back(s[i]);
        auto it = count.find(f);
        if (it == count.end())
          count[f] = {1, s[drop]};
        else
          it->second.first++;
      }
    }
    std::vector<std::pair<std::vector<int>, int>> res;
    for (const auto& [f, ci] : count)
      if (ci.first == 1) res.emplace_back(f, ci.second);
    return res;
  };

  for (int p = 0; p < n; ++p) {
    if (used[p]) continue;
    std::vector<std::vector<int>> added;
    for (const auto& [facet, opposite] : boundary_facets()) {
      std::vector<int> with_p = facet, with_o = facet;
      with_p.push_back(p);
      with_o.push_back(opposite);
      BigInt hp = simplex_det(A, with_p);
      if (hp == 0) continue;  // p lies on the facet hyperplane, not beyond it
      BigInt ho = simplex_det(A, with_o);
      bool beyond = (hp > 0) != (ho > 0);
      if (!beyond) continue;
      std::sort(with_p.begin(), with_p.end());
      added.push_back(std::move(with_p));
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
    used[p] = 1;
  }

  BigInt vol(0);
  for (const auto& s : simplices) {
    BigInt v = simplex_det(A, s);
    vol += v < 0 ? BigInt(-v) : v;
  }
  return vol;
}

}  // namespace gkz
