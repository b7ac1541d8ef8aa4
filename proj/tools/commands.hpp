#pragma once

#include "gkz/hypergeo.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gkzcli {

using Json = nlohmann::ordered_json;

struct Options {
  std::string matrix_path;
  std::string weight;    // comma-separated rationals; empty = default refinement
  std::string beta;      // comma-separated symbolic entries
  std::string exponent;  // comma-separated symbolic entries
  bool all = false;
  long radius = 6;
  long cap = 50;
  std::uint64_t seed = 0;
  bool json = false;
  bool strict = false;
};

// exit codes: 0 ok, 2 input error, 3 internal invariant breach,
// 4 inconclusive under --strict
int cmd_analyze(const Options& opt);
int cmd_exceptional(const Options& opt);
int cmd_series(const Options& opt);
int cmd_stdpairs(const Options& opt);
int cmd_toric(const Options& opt);

// "1+a", "2/3", "-a", "1-2a" ... one linear expression in the symbol a
gkz::RatFunc parse_symbolic_entry(const std::string& s);
std::vector<gkz::RatFunc> parse_symbolic_vector(const std::string& s);
std::vector<gkz::Rat> parse_rational_vector(const std::string& s);

std::string render_text(const Json& doc);

}  // namespace gkzcli
