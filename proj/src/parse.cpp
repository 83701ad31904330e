#include "octo/parse.hpp"

#include <algorithm>
#include <cctype>

namespace octo {

namespace {

bool is_power_of_two(const mpz_class& v) { return sgn(v) > 0 && mpz_popcount(v.get_mpz_t()) == 1; }

class AffineParser {
public:
  AffineParser(std::string_view text, const std::vector<std::string>& symbols, int line, int column)
      : text_(text), symbols_(symbols), line_(line), column_(column) {}

  Affine run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Affine a = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return a;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in '" + std::string(text_) + "'", line_,
                     column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void add_into(Affine& acc, const Affine& x, bool negate) {
    acc.constant += negate ? -x.constant : x.constant;
    for (const auto& [name, c] : x.coeffs) {
      CDyadic& slot = acc.coeffs[name];
      slot += negate ? -c : c;
      if (slot.is_zero()) acc.coeffs.erase(name);
    }
  }

  static Affine scale(const Affine& x, const CDyadic& s) {
    Affine r;
    r.constant = x.constant * s;
    for (const auto& [name, c] : x.coeffs) {
      CDyadic p = c * s;
      if (!p.is_zero()) r.coeffs.emplace(name, std::move(p));
    }
    return r;
  }

  Affine expr() {
    Affine acc = term();
    for (;;) {
      if (eat('+')) {
        add_into(acc, term(), false);
      } else if (eat('-')) {
        add_into(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Affine term() {
    Affine acc = unary();
    while (eat('*')) {
      const std::size_t at = pos_;
      Affine rhs = unary();
      if (!acc.coeffs.empty() && !rhs.coeffs.empty()) {
        pos_ = at;
        fail("product of two symbolic factors is not affine");
      }
      acc = acc.coeffs.empty() ? scale(rhs, acc.constant) : scale(acc, rhs.constant);
    }
    return acc;
  }

  Affine unary() {
    if (eat('-')) return scale(unary(), CDyadic{-1});
    if (eat('+')) return unary();
    return primary();
  }

  Affine primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Affine inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Affine r;
      r.constant = number();
      // `1/2i` is shorthand for (1/2)*i.
      if (pos_ < text_.size() && text_[pos_] == 'i' &&
          (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        r.constant *= CDyadic::i();
      }
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      Affine r;
      if (name == "i") {
        r.constant = CDyadic::i();
        return r;
      }
      if (std::find(symbols_.begin(), symbols_.end(), name) == symbols_.end()) {
        pos_ = start;
        fail("unknown symbol '" + name + "'");
      }
      r.coeffs.emplace(std::move(name), CDyadic{1});
      return r;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  CDyadic number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("missing denominator");
      mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (!is_power_of_two(den)) {
        pos_ = dstart;
        fail("denominator " + den.get_str() + " is not a power of two");
      }
      const auto k = static_cast<std::uint32_t>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
      return Dyadic{num, k};
    }
    return Dyadic{num, 0};
  }

  std::string_view text_;
  const std::vector<std::string>& symbols_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

Affine parse_affine(std::string_view text, const std::vector<std::string>& symbols, int line,
                    int column) {
  return AffineParser(text, symbols, line, column).run();
}

std::vector<std::vector<Token>> tokenize_fixture(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<Token> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      if (row.empty() && line[i] == '#') break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      row.push_back({std::string(line.substr(start, i - start)), line_no, static_cast<int>(start) + 1});
    }
    if (!row.empty()) rows.push_back(std::move(row));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return rows;
}

}  // namespace octo
