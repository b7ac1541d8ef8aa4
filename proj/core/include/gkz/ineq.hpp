#pragma once

#include "gkz/numeric.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gkz {

// One linear constraint c . z <= k over Q^dim.
struct Constraint {
  std::vector<Rat> c;
  Rat k;
  std::string label;
};

struct IneqSystem {
  int dim = 0;
  std::vector<Constraint> rows;

  IneqSystem() = default;
  explicit IneqSystem(int dimension) : dim(dimension) {}
  void add(std::vector<Rat> c, Rat k, std::string label = {});
  void add_int(const std::vector<int>& c, int k, std::string label = {});
};

struct LatticePointReport {
  std::vector<std::vector<BigInt>> points;  // lexicographically sorted
  bool exhaustive = false;
  long search_radius_used = 0;
};

// Exact projection of the solution set onto the remaining coordinates
// (coord is 0-based). Redundancy control is duplicate removal only.
IneqSystem eliminate(const IneqSystem& S, int coord);

// Recession-cone test on the constraint formula: true iff
// {z : c.z <= 0 for all rows} = {0}. Ignores feasibility.
bool is_bounded(const IneqSystem& S);

bool is_feasible(const IneqSystem& S);

// Complete enumeration whenever the system is bounded; otherwise every
// lattice point inside the L-infinity cap ball, flagged non-exhaustive.
LatticePointReport enumerate_lattice_points(const IneqSystem& S, long cap);

// Indices j whose reversed system (c_j . z >= k_j) is an unbounded set.
// Empty reversed sets count as bounded.
std::set<int> unbounded_reversals(const IneqSystem& S);

// Smallest k attained by objective . z on the lattice points of S, along
// with all attaining points. Unset optimum means infeasible-or-not-found;
// bounded_objective=false means the objective has no lower bound on S.
struct LatticeMinResult {
  bool bounded_objective = true;
  bool exhaustive = true;  // false if the search was cap-limited
  std::optional<Rat> optimum;
  std::vector<std::vector<BigInt>> argmins;
};
LatticeMinResult minimize_on_lattice(const IneqSystem& S, const std::vector<Rat>& objective, long cap);

}  // namespace gkz
