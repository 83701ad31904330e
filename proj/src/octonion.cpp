#include "octo/octonion.hpp"

#include "octo/parse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace octo {

namespace {

// Row a, column b holds e_a * e_b as (sign, index).
constexpr int kTable2[8][8][2] = {
    {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}},
    {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}},
    {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}},
    {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}, {-1, 5}, {+1, 4}, {+1, 7}, {-1, 6}},
    {{+1, 4}, {-1, 7}, {-1, 6}, {+1, 5}, {-1, 0}, {-1, 3}, {+1, 2}, {+1, 1}},
    {{+1, 5}, {+1, 6}, {-1, 7}, {-1, 4}, {+1, 3}, {-1, 0}, {-1, 1}, {+1, 2}},
    {{+1, 6}, {-1, 5}, {+1, 4}, {-1, 7}, {-1, 2}, {+1, 1}, {-1, 0}, {+1, 3}},
    {{+1, 7}, {+1, 4}, {+1, 5}, {+1, 6}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 0}},
};

template <typename S>
std::string render_terms(const Octonion<S>& x, char unit, auto&& coefficient) {
  std::string out;
  for (int k = 0; k < 8; ++k) {
    if (x[k] == S{}) continue;
    std::string c = coefficient(x[k]);
    bool negative = false;
    if (c.size() > 1 && c.front() == '-' && c.find_first_of("+-", 1) == std::string::npos) {
      negative = true;
      c.erase(0, 1);
    }
    const std::string basis = std::string(1, unit) + std::to_string(k);
    std::string term = c == "1" ? basis : "(" + c + ")" + basis;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string format_double(double v, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

}  // namespace

const StructureTable& builtin_table() {
  static const StructureTable table = [] {
    std::array<SignedIndex, 64> cells{};
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) cells[static_cast<std::size_t>(a * 8 + b)] = {kTable2[a][b][0], kTable2[a][b][1]};
    return StructureTable{cells};
  }();
  return table;
}

std::vector<std::array<int, 3>> StructureTable::positive_triples() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      const SignedIndex& c = (*this)(a, b);
      if (c.index == 0) continue;
      std::array<int, 3> t{a, b, c.index};
      if (c.sign < 0) std::swap(t[0], t[1]);  // e_b e_a = +e_c
      // Rotate the cyclic triple so it starts at its smallest member.
      std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> table_violations(const StructureTable& t) {
  std::vector<std::string> v;
  auto cell = [](int a, int b) { return "(e" + std::to_string(a) + ",e" + std::to_string(b) + ")"; };
  for (int b = 0; b < 8; ++b) {
    if (t(0, b) != SignedIndex{1, b}) v.push_back("identity row broken at " + cell(0, b));
    if (t(b, 0) != SignedIndex{1, b}) v.push_back("identity column broken at " + cell(b, 0));
  }
  for (int a = 1; a < 8; ++a) {
    if (t(a, a) != SignedIndex{-1, 0}) v.push_back("square is not -e0 at " + cell(a, a));
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      const SignedIndex& ab = t(a, b);
      const SignedIndex& ba = t(b, a);
      if (ab.index != ba.index || ab.sign != -ba.sign) v.push_back("not antisymmetric at " + cell(a, b));
    }
  }
  return v;
}

std::string to_string(const Bioctonion& x, char unit) {
  return render_terms(x, unit, [](const CDyadic& c) { return c.str(); });
}

std::string to_string(const RealOctonion& x, char unit) {
  return render_terms(x, unit, [](const Dyadic& c) { return c.str(); });
}

std::string to_string(const ApproxBioctonion& x, int precision, char unit) {
  return render_terms(x, unit, [precision](const std::complex<double>& c) {
    if (c.imag() == 0.0) return format_double(c.real(), precision);
    if (c.real() == 0.0) return format_double(c.imag(), precision) + "i";
    return format_double(c.real(), precision) + (c.imag() < 0 ? "" : "+") +
           format_double(c.imag(), precision) + "i";
  });
}

SplitBasis build_split_basis() {
  const CDyadic half = CDyadic::half();
  const CDyadic ihalf = CDyadic::i() * half;
  SplitBasis s;
  s.u[0] = Bioctonion::unit(0, half) + Bioctonion::unit(7, ihalf);
  s.ustar[0] = Bioctonion::unit(0, half) + Bioctonion::unit(7, -ihalf);
  for (int m = 1; m <= 3; ++m) {
    s.u[static_cast<std::size_t>(m)] = Bioctonion::unit(m, half) + Bioctonion::unit(m + 3, ihalf);
    s.ustar[static_cast<std::size_t>(m)] = Bioctonion::unit(m, half) + Bioctonion::unit(m + 3, -ihalf);
  }
  return s;
}

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Parity of the permutation (i,j,k) of (1,2,3).
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

std::vector<RelationCheck> verify_split_relations(const SplitBasis& basis, const StructureTable& t) {
  std::vector<RelationCheck> out;
  auto u = [&](int k) -> const Bioctonion& { return basis.u[static_cast<std::size_t>(k)]; };
  auto us = [&](int k) -> const Bioctonion& { return basis.ustar[static_cast<std::size_t>(k)]; };
  auto mul = [&](const Bioctonion& a, const Bioctonion& b) { return oct_mul(a, b, t); };
  auto record = [&out](std::string name, Bioctonion lhs, Bioctonion rhs) {
    const bool ok = lhs == rhs;
    out.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  };
  auto eps_sum = [&](int i, int j, bool starred) {
    Bioctonion r;
    for (int k = 1; k <= 3; ++k) {
      const int e = levi_civita(i, j, k);
      if (e != 0) r += CDyadic{e} * (starred ? us(k) : u(k));
    }
    return r;
  };
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const std::string si = std::to_string(i);
      const std::string sj = std::to_string(j);
      record("u" + si + "·u" + sj + " = ε" + si + sj + "k u_k*", mul(u(i), u(j)), eps_sum(i, j, true));
      record("-u" + sj + "·u" + si + " = ε" + si + sj + "k u_k*", -mul(u(j), u(i)), eps_sum(i, j, true));
      record("u" + si + "*·u" + sj + "* = ε" + si + sj + "k u_k", mul(us(i), us(j)), eps_sum(i, j, false));
      record("-u" + sj + "*·u" + si + "* = ε" + si + sj + "k u_k", -mul(us(j), us(i)), eps_sum(i, j, false));
      const CDyadic delta{i == j ? -1 : 0};
      record("u" + si + "·u" + sj + "* = -δ" + si + sj + " u0", mul(u(i), us(j)), delta * u(0));
      record("u" + si + "*·u" + sj + " = -δ" + si + sj + " u0*", mul(us(i), u(j)), delta * us(0));
    }
  }
  const Bioctonion zero;
  for (int i = 1; i <= 3; ++i) {
    const std::string si = std::to_string(i);
    record("u0·u" + si + " = u" + si, mul(u(0), u(i)), u(i));
    record("u" + si + "·u0* = u" + si, mul(u(i), us(0)), u(i));
    record("u0*·u" + si + "* = u" + si + "*", mul(us(0), us(i)), us(i));
    record("u" + si + "*·u0 = u" + si + "*", mul(us(i), u(0)), us(i));
    record("u" + si + "·u0 = 0", mul(u(i), u(0)), zero);
    record("u0·u" + si + "* = 0", mul(u(0), us(i)), zero);
    record("u" + si + "*·u0* = 0", mul(us(i), us(0)), zero);
    record("u0*·u" + si + " = 0", mul(us(0), u(i)), zero);
  }
  record("u0·u0* = 0", mul(u(0), us(0)), zero);
  record("u0*·u0 = 0", mul(us(0), u(0)), zero);
  record("u0·u0 = u0", mul(u(0), u(0)), u(0));
  record("u0*·u0* = u0*", mul(us(0), us(0)), us(0));
  return out;
}

SignedIndex parse_signed_index(std::string_view token, char unit, int line, int column) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
    sign = token[pos] == '-' ? -1 : 1;
    ++pos;
  }
  if (pos >= token.size() || token[pos] != unit) {
    throw ParseError("expected '" + std::string(1, unit) + "<0-7>' token, got '" + std::string(token) + "'",
                     line, column + static_cast<int>(pos));
  }
  ++pos;
  if (pos + 1 != token.size() || token[pos] < '0' || token[pos] > '7') {
    throw ParseError("basis index out of range in '" + std::string(token) + "'", line,
                     column + static_cast<int>(pos));
  }
  return {sign, token[pos] - '0'};
}

StructureTable parse_structure_table(std::string_view text, char unit) {
  const auto rows = tokenize_fixture(text);
  if (rows.size() != 8) {
    throw ParseError("expected 8 table rows, found " + std::to_string(rows.size()),
                     rows.empty() ? 0 : rows.back().front().line, 1);
  }
  std::array<SignedIndex, 64> cells{};
  for (std::size_t r = 0; r < 8; ++r) {
    if (rows[r].size() != 8) {
      throw ParseError("expected 8 cells, found " + std::to_string(rows[r].size()), rows[r].front().line, 1);
    }
    for (std::size_t c = 0; c < 8; ++c) {
      const Token& tok = rows[r][c];
      cells[r * 8 + c] = parse_signed_index(tok.text, unit, tok.line, tok.column);
    }
  }
  return StructureTable{cells};
}

std::string to_string(const SignedIndex& s, char unit) {
  return std::string(s.sign < 0 ? "-" : "") + unit + std::to_string(s.index);
}

}  // namespace octo
