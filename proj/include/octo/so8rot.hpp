#pragma once

#include "octo/linear_form.hpp"
#include "octo/matrep.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octo {

/// X = Σ f_A β_A as a symbolic matrix.
SymMatrix8 assemble_X(const BetaSet& betas = canonical_betas());

struct BlockDecomp {
  SymMatrix4 A;
  SymMatrix4 B;
};

/// A cell that breaks the compact form [[A, B†], [B, -A]] (0-based, 8x8 coordinates).
struct BlockMismatch {
  int row;
  int col;
  LinearForm expected;
  LinearForm actual;
};

class StructureMismatch : public std::runtime_error {
public:
  explicit StructureMismatch(std::vector<BlockMismatch> cells);
  const std::vector<BlockMismatch>& cells() const { return cells_; }

private:
  std::vector<BlockMismatch> cells_;
};

/// Splits X into A = top-left, B = bottom-left after checking that the
/// top-right block is B† and the bottom-right block is -A.
BlockDecomp block_decompose(const SymMatrix8& X);
SymMatrix8 reassemble(const BlockDecomp& d);

/// I + θ β_k β_l; k, l are 1-based and must differ.
Matrix8 rotation_operator(int k, int l, const Dyadic& theta, const BetaSet& betas = canonical_betas());

class SingularRotation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A symbolic matrix divided by a nonzero scalar. Conjugation by a dyadic
/// matrix generally leaves the dyadic ring (1/(1+θ²) for θ = 2^-6), so the
/// exact result is carried as numerator / denominator.
struct ScaledSymMatrix {
  SymMatrix8 numerator;
  CDyadic denominator{1};

  /// Exact equality of the represented values (cross-multiplied).
  bool equals(const SymMatrix8& m) const;
  ComplexMatrix8 evaluate(const std::array<double, 8>& f) const;
};

/// M X M^{-1}, with M^{-1} = adj(M) / det(M) from fraction-free elimination.
/// Throws SingularRotation when det(M) = 0.
ScaledSymMatrix conjugate_exact(const SymMatrix8& X, const Matrix8& M);
ScaledSymMatrix conjugate_exact(const ScaledSymMatrix& X, const Matrix8& M);

/// R_kl X R_kl^{-1}.
ScaledSymMatrix rotate_exact(const SymMatrix8& X, int k, int l, const Dyadic& theta,
                             const BetaSet& betas = canonical_betas());

struct FirstOrder {
  SymMatrix8 result;  // X + Δ
  SymMatrix8 delta;   // θ [β_k β_l, X]
};

FirstOrder rotate_first_order(const SymMatrix8& X, int k, int l, const Dyadic& theta,
                              const BetaSet& betas = canonical_betas());

class DegenerateBasis : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Trace projection onto span{β}: coefficient A is Tr(β_A X) / G_AA.
struct Projection {
  std::array<LinearForm, 8> components;  // f'_A
  SymMatrix8 residual;                   // X - Σ f'_A β_A
};

/// Throws DegenerateBasis when the Gram matrix is singular, and also when it
/// is not diagonal (only trace-orthogonal bases are supported).
Projection extract_components(const SymMatrix8& Xp, const BetaSet& betas = canonical_betas());

/// First-order component laws f_A -> f_A + θ L_A(f).
struct ComponentMap {
  std::array<LinearForm, 8> increments;  // L_A
  SymMatrix8 residual;                   // θ-coefficient left outside span{β}

  bool closes() const { return residual.is_zero(); }
};

/// Projects [β_k β_l, X] onto the β basis: the θ-coefficient of the
/// first-order rotation of X.
ComponentMap component_map(int k, int l, const BetaSet& betas = canonical_betas());

/// Per-line comparison of a derived component map with a transcribed one.
struct ComponentLineDiff {
  int index;  // 1-based
  LinearForm derived;
  LinearForm stated;
  bool match;
  bool derived_imaginary;  // derived increment has a non-real coefficient
  bool stated_imaginary;
};

std::vector<ComponentLineDiff> diff_component_maps(const ComponentMap& derived,
                                                   const std::array<LinearForm, 8>& stated);

/// `f3' = f3 + θ·(2*i*f6)` style line; `f3' = f3` when L is zero.
std::string render_component_line(int index, const LinearForm& increment);

struct RotationClasses {
  std::vector<std::vector<std::pair<int, int>>> classes;  // sorted; each class sorted
  std::size_t class_of_12 = 0;                            // index into classes
};

/// Groups all 28 planes k<l by exact equality of β_k β_l.
RotationClasses duplicate_rotation_scan(const BetaSet& betas = canonical_betas());

/// Max-entry magnitude of (rotate_exact - rotate_first_order) at numeric f.
double first_order_defect(const SymMatrix8& X, int k, int l, const Dyadic& theta,
                          const std::array<double, 8>& f, const BetaSet& betas = canonical_betas());

}  // namespace octo
