#pragma once

#include "gkz/intmatrix.hpp"

#include <string>

namespace gkz {

struct ParseError : Error {
  int line, column;
  ParseError(const std::string& what, int l, int c)
      : Error(what + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"), line(l), column(c) {}
};

// Plain text matrix format: a header line "d n" followed by d lines of n
// integers each. Blank lines and '#' comment lines are ignored.
IntMatrix parse_matrix_text(const std::string& text);
IntMatrix read_matrix_file(const std::string& path);  // throws Error if unreadable

}  // namespace gkz
