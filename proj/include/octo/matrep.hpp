#pragma once

// 8x8 matrix representation: Pauli and Dirac-Pauli gamma matrices, Kronecker
// products, elementary matrices Σ_mn, the eight β matrices in their two
// written forms, and the E matrices with their signed multiplication table.

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

/// σ_j, j in 1..3 (σ1 real off-diagonal, σ2 = [[0,-i],[i,0]], σ3 diagonal).
Matrix2 pauli(int j);
/// γ_j = [[0, -iσ_j], [iσ_j, 0]] for j in 1..3; γ4 = diag(I, -I).
Matrix4 gamma(int j);

/// Left factor indexes the 4x4 blocks: entry (4i+k, 4j+l) = a(i,j) b(k,l).
template <std::size_t P, std::size_t Q>
SquareMatrix<CDyadic, P * Q> kron(const SquareMatrix<CDyadic, P>& a, const SquareMatrix<CDyadic, Q>& b) {
  SquareMatrix<CDyadic, P * Q> r;
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < Q; ++k)
        for (std::size_t l = 0; l < Q; ++l) r(i * Q + k, j * Q + l) = a(i, j) * b(k, l);
    }
  return r;
}

/// Elementary matrix with a single 1 at (m, n), both 1-based.
Matrix8 sigma_mn(int m, int n);

/// One line of the β definitions: the σ⊗γ text and the Σ expansion.
struct BetaDefinition {
  int pauli = 1;      // σ index of the tensor form
  int gamma = 1;      // γ index of the tensor form
  CDyadic prefactor;  // 1 or i in front of the bracket
  struct Term {
    int sign;
    int m;
    int n;
  };
  std::vector<Term> terms;

  friend bool operator==(const BetaDefinition& a, const BetaDefinition& b) {
    if (a.pauli != b.pauli || a.gamma != b.gamma || a.prefactor != b.prefactor) return false;
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
      const auto& x = a.terms[k];
      const auto& y = b.terms[k];
      if (x.sign != y.sign || x.m != y.m || x.n != y.n) return false;
    }
    return true;
  }
};

using BetaDefinitions = std::array<BetaDefinition, 8>;

/// The β definitions as transcribed in fixtures/eq2_sigma.txt.
const BetaDefinitions& builtin_beta_definitions();
BetaDefinitions parse_beta_definitions(std::string_view text);

/// β_A from its Σ expansion (A is 1-based).
Matrix8 beta_sigma_expansion(int A, const BetaDefinitions& defs = builtin_beta_definitions());
/// β_A from its σ⊗γ text.
Matrix8 beta_tensor_text(int A, const BetaDefinitions& defs = builtin_beta_definitions());

enum class BetaVariant { SigmaExpansion, TensorText };

std::string to_string(BetaVariant v);

struct BetaSet {
  BetaVariant variant = BetaVariant::SigmaExpansion;
  std::array<Matrix8, 8> matrices;  // matrices[A-1] = β_A

  const Matrix8& operator[](int A) const { return matrices.at(static_cast<std::size_t>(A - 1)); }
};

BetaSet build_beta_set(BetaVariant variant, const BetaDefinitions& defs = builtin_beta_definitions());
/// The canonical set (Σ-expansion form).
const BetaSet& canonical_betas();

/// G_AB = Tr(β_A β_B).
Matrix8 gram(const BetaSet& set);

/// The 8x8 table β_A β_B + β_B β_A.
std::array<Matrix8, 64> anticommutators(const BetaSet& set);

struct EMatrixSet {
  std::array<Matrix8, 8> matrices;  // E0..E7

  const Matrix8& operator[](int k) const { return matrices.at(static_cast<std::size_t>(k)); }
};

/// Whether an alternate product listed for E_k equals the primary one.
struct AlternateCheck {
  int e_index;
  std::string primary;    // e.g. "β1β5"
  std::string alternate;  // e.g. "β2β6"
  bool equal;
};

struct EBuild {
  EMatrixSet e;
  std::vector<AlternateCheck> alternates;
};

/// E0 = I, E1 = β1β5, E2 = β1β7, E3 = β7β5, E4 = β7, E5 = β5, E6 = β1,
/// E7 = β7β5β1; records the alternates β2β6, β2β8, β8β6, β8β6β1 and E3E6.
EBuild build_E(const BetaSet& set);

/// 8x8 cells; std::nullopt marks a product outside ±{E0..E7}.
struct SignedTable {
  std::array<std::optional<SignedIndex>, 64> cells{};
  char unit = 'E';

  const std::optional<SignedIndex>& operator()(int a, int b) const {
    return cells[static_cast<std::size_t>(a * 8 + b)];
  }
  bool complete() const;
};

SignedTable signed_table(const EMatrixSet& set);
SignedTable to_signed_table(const StructureTable& t, char unit = 'e');
/// Renders cells as `e3`, `-E0`, or `NB` for non-basis products.
std::string cell_token(const std::optional<SignedIndex>& cell, char unit);

enum class CellRelation { Identical, SignFlipped, Different };

std::string to_string(CellRelation r);

struct CellDiff {
  int row;  // unit indices, 0-based (e0..e7)
  int col;
  CellRelation relation;
  std::optional<SignedIndex> left;
  std::optional<SignedIndex> right;
};

struct TableDiff {
  int identical = 0;
  int sign_flipped = 0;
  int different = 0;
  std::vector<CellDiff> cells;  // non-identical cells, row-major
};

/// Cell-by-cell comparison; units are ignored so e-tables and E-tables compare.
TableDiff compare_tables(const SignedTable& t1, const SignedTable& t2);

/// Eight lines of eight canonical scalar tokens.
std::string dump_matrix(const Matrix8& m);

}  // namespace octo
