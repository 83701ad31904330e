#pragma once

// Small recursive-descent parser for the affine expressions used in fixture
// files: `-f4-i*f2`, `-i*(f4+i*f2)`, `1/2i`, `-t`. Products are allowed only
// when at most one factor carries a symbol, so every result is affine.

#include "octo/dyadic.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}

  /// 1-based; 0 when the input did not come from a file.
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

struct Affine {
  CDyadic constant;
  std::map<std::string, CDyadic> coeffs;  // zero coefficients are dropped
};

/// Parse `text` as an affine combination of the names in `symbols`.
/// `line` and `column` locate `text` inside its file for diagnostics.
Affine parse_affine(std::string_view text, const std::vector<std::string>& symbols,
                    int line = 0, int column = 1);

/// A whitespace-separated token together with its 1-based position.
struct Token {
  std::string text;
  int line;
  int column;
};

/// Splits fixture text into lines of tokens. Blank lines and lines whose
/// first non-space character is `#` are skipped.
std::vector<std::vector<Token>> tokenize_fixture(std::string_view text);

}  // namespace octo
