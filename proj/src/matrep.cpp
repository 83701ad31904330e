#include "octo/matrep.hpp"

#include "octo/parse.hpp"

#include <sstream>
#include <stdexcept>

namespace octo {

Matrix2 pauli(int j) {
  Matrix2 s;
  switch (j) {
    case 1:
      s(0, 1) = 1;
      s(1, 0) = 1;
      break;
    case 2:
      s(0, 1) = -CDyadic::i();
      s(1, 0) = CDyadic::i();
      break;
    case 3:
      s(0, 0) = 1;
      s(1, 1) = -1;
      break;
    default:
      throw std::out_of_range("pauli index " + std::to_string(j) + " not in 1..3");
  }
  return s;
}

Matrix4 gamma(int j) {
  if (j == 4) {
    const Matrix2 one = Matrix2::identity();
    return assemble(one, Matrix2{}, Matrix2{}, -one);
  }
  if (j < 1 || j > 4) throw std::out_of_range("gamma index " + std::to_string(j) + " not in 1..4");
  const Matrix2 s = pauli(j);
  return assemble(Matrix2{}, scale(-CDyadic::i(), s), scale(CDyadic::i(), s), Matrix2{});
}

Matrix8 sigma_mn(int m, int n) {
  if (m < 1 || m > 8 || n < 1 || n > 8) {
    throw std::out_of_range("Σ index (" + std::to_string(m) + "," + std::to_string(n) + ") not in 1..8");
  }
  Matrix8 r;
  r(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n - 1)) = 1;
  return r;
}

namespace {

const char* const kBetaFixture = R"(
beta1 s1 g1 i +S36 +S45 +S72 +S81 -S18 -S27 -S54 -S63
beta2 s3 g1 i +S32 +S41 +S58 +S67 -S14 -S23 -S76 -S85
beta3 s2 g3 1 +S28 +S82 +S35 +S53 -S64 -S46 -S71 -S17
beta4 s3 g2 1 +S23 +S32 +S58 +S85 -S14 -S41 -S67 -S76
beta5 s1 g3 i +S28 +S35 +S64 +S71 -S17 -S46 -S53 -S82
beta6 s3 g3 i +S24 +S31 +S57 +S86 -S13 -S42 -S68 -S75
beta7 s1 g4 1 +S15 +S26 +S51 +S62 -S37 -S48 -S73 -S84
beta8 s1 g1 1 +S11 +S22 +S77 +S88 -S33 -S44 -S55 -S66
)";

int parse_prefixed_digit(const Token& tok, char prefix, int lo, int hi) {
  if (tok.text.size() != 2 || tok.text[0] != prefix || tok.text[1] < '0' + lo || tok.text[1] > '0' + hi) {
    throw ParseError("expected " + std::string(1, prefix) + "<" + std::to_string(lo) + "-" +
                         std::to_string(hi) + ">, got '" + tok.text + "'",
                     tok.line, tok.column);
  }
  return tok.text[1] - '0';
}

}  // namespace

BetaDefinitions parse_beta_definitions(std::string_view text) {
  BetaDefinitions defs{};
  std::array<bool, 8> seen{};
  for (const auto& row : tokenize_fixture(text)) {
    const Token& name = row.front();
    if (name.text.size() != 5 || name.text.rfind("beta", 0) != 0 || name.text[4] < '1' || name.text[4] > '8') {
      throw ParseError("expected beta<1-8>, got '" + name.text + "'", name.line, name.column);
    }
    const auto A = static_cast<std::size_t>(name.text[4] - '1');
    if (seen[A]) throw ParseError("duplicate definition of " + name.text, name.line, name.column);
    if (row.size() < 5) throw ParseError("truncated beta definition", name.line, name.column);
    seen[A] = true;
    BetaDefinition& d = defs[A];
    d.pauli = parse_prefixed_digit(row[1], 's', 1, 3);
    d.gamma = parse_prefixed_digit(row[2], 'g', 1, 4);
    d.prefactor = parse_affine(row[3].text, {}, row[3].line, row[3].column).constant;
    for (std::size_t k = 4; k < row.size(); ++k) {
      const Token& t = row[k];
      const std::string& s = t.text;
      if (s.size() != 4 || (s[0] != '+' && s[0] != '-') || s[1] != 'S' || s[2] < '1' || s[2] > '8' ||
          s[3] < '1' || s[3] > '8') {
        throw ParseError("expected ±S<m><n> with m,n in 1..8, got '" + s + "'", t.line, t.column);
      }
      d.terms.push_back({s[0] == '-' ? -1 : 1, s[2] - '0', s[3] - '0'});
    }
  }
  for (std::size_t A = 0; A < 8; ++A) {
    if (!seen[A]) throw ParseError("missing definition of beta" + std::to_string(A + 1), 0, 1);
  }
  return defs;
}

const BetaDefinitions& builtin_beta_definitions() {
  static const BetaDefinitions defs = parse_beta_definitions(kBetaFixture);
  return defs;
}

Matrix8 beta_sigma_expansion(int A, const BetaDefinitions& defs) {
  const BetaDefinition& d = defs.at(static_cast<std::size_t>(A - 1));
  Matrix8 sum;
  for (const auto& t : d.terms) {
    if (t.sign < 0) {
      sum -= sigma_mn(t.m, t.n);
    } else {
      sum += sigma_mn(t.m, t.n);
    }
  }
  return scale(d.prefactor, sum);
}

Matrix8 beta_tensor_text(int A, const BetaDefinitions& defs) {
  const BetaDefinition& d = defs.at(static_cast<std::size_t>(A - 1));
  return kron(pauli(d.pauli), gamma(d.gamma));
}

std::string to_string(BetaVariant v) {
  return v == BetaVariant::SigmaExpansion ? "sigma-expansion" : "tensor-text";
}

BetaSet build_beta_set(BetaVariant variant, const BetaDefinitions& defs) {
  BetaSet s;
  s.variant = variant;
  for (int A = 1; A <= 8; ++A) {
    s.matrices[static_cast<std::size_t>(A - 1)] =
        variant == BetaVariant::SigmaExpansion ? beta_sigma_expansion(A, defs) : beta_tensor_text(A, defs);
  }
  return s;
}

const BetaSet& canonical_betas() {
  static const BetaSet s = build_beta_set(BetaVariant::SigmaExpansion);
  return s;
}

Matrix8 gram(const BetaSet& set) {
  Matrix8 g;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      g(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = (set[a] * set[b]).trace();
  return g;
}

std::array<Matrix8, 64> anticommutators(const BetaSet& set) {
  std::array<Matrix8, 64> out;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      out[static_cast<std::size_t>((a - 1) * 8 + (b - 1))] = set[a] * set[b] + set[b] * set[a];
  return out;
}

EBuild build_E(const BetaSet& b) {
  EBuild out;
  auto& E = out.e.matrices;
  E[0] = Matrix8::identity();
  E[1] = b[1] * b[5];
  E[2] = b[1] * b[7];
  E[3] = b[7] * b[5];
  E[4] = b[7];
  E[5] = b[5];
  E[6] = b[1];
  E[7] = b[7] * b[5] * b[1];
  out.alternates = {
      {1, "β1β5", "β2β6", E[1] == b[2] * b[6]},
      {2, "β1β7", "β2β8", E[2] == b[2] * b[8]},
      {3, "β7β5", "β8β6", E[3] == b[8] * b[6]},
      {7, "β7β5β1", "β8β6β1", E[7] == b[8] * b[6] * b[1]},
      {7, "β7β5β1", "E3E6", E[7] == E[3] * E[6]},
  };
  return out;
}

bool SignedTable::complete() const {
  for (const auto& c : cells)
    if (!c) return false;
  return true;
}

SignedTable signed_table(const EMatrixSet& set) {
  SignedTable t;
  t.unit = 'E';
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Matrix8 p = set[a] * set[b];
      std::optional<SignedIndex> hit;
      for (int c = 0; c < 8 && !hit; ++c) {
        if (p == set[c]) {
          hit = SignedIndex{1, c};
        } else if (p == -set[c]) {
          hit = SignedIndex{-1, c};
        }
      }
      t.cells[static_cast<std::size_t>(a * 8 + b)] = hit;
    }
  }
  return t;
}

SignedTable to_signed_table(const StructureTable& s, char unit) {
  SignedTable t;
  t.unit = unit;
  for (std::size_t k = 0; k < 64; ++k) t.cells[k] = s.cells()[k];
  return t;
}

std::string cell_token(const std::optional<SignedIndex>& cell, char unit) {
  return cell ? to_string(*cell, unit) : std::string("NB");
}

std::string to_string(CellRelation r) {
  switch (r) {
    case CellRelation::Identical:
      return "identical";
    case CellRelation::SignFlipped:
      return "sign-flipped";
    case CellRelation::Different:
      break;
  }
  return "different";
}

TableDiff compare_tables(const SignedTable& t1, const SignedTable& t2) {
  TableDiff d;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto& x = t1(a, b);
      const auto& y = t2(a, b);
      CellRelation rel = CellRelation::Different;
      if (x && y && x->index == y->index) rel = x->sign == y->sign ? CellRelation::Identical : CellRelation::SignFlipped;
      switch (rel) {
        case CellRelation::Identical:
          ++d.identical;
          continue;
        case CellRelation::SignFlipped:
          ++d.sign_flipped;
          break;
        case CellRelation::Different:
          ++d.different;
          break;
      }
      d.cells.push_back({a, b, rel, x, y});
    }
  }
  return d;
}

std::string dump_matrix(const Matrix8& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) os << (j ? " " : "") << m(i, j).str();
    os << '\n';
  }
  return os.str();
}

}  // namespace octo
