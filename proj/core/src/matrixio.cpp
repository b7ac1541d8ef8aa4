#include "gkz/matrixio.hpp"

#include <fstream>
#include <sstream>

namespace gkz {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  BigInt next_int(const char* what) {
    skip_space_and_comments();
    if (eof()) throw ParseError(std::string("expected ") + what + ", found end of input", line, col);
    int l = line, c = col;
    std::string tok;
    if (peek() == '-' || peek() == '+') {
      tok += peek();
      advance();
    }
    while (!eof() && isdigit(static_cast<unsigned char>(peek()))) {
      tok += peek();
      advance();
    }
    if (tok.empty() || tok == "-" || tok == "+")
      throw ParseError(std::string("expected ") + what, l, c);
    return BigInt(tok);
  }
};

}  // namespace

IntMatrix parse_matrix_text(const std::string& text) {
  Cursor cur{text};
  BigInt bd = cur.next_int("row count d");
  BigInt bn = cur.next_int("column count n");
  if (bd < 1 || bd > 64 || bn < 1 || bn > 64) throw ParseError("unreasonable matrix dimensions", 1, 1);
  const int d = static_cast<int>(bd), n = static_cast<int>(bn);
  IntMatrix M(d, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = cur.next_int("matrix entry");
  cur.skip_space_and_comments();
  if (!cur.eof()) throw ParseError("trailing tokens after the matrix", cur.line, cur.col);
  return M;
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_text(ss.str());
}

}  // namespace gkz
