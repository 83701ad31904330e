#include "octo/so8rot.hpp"

#include <algorithm>

namespace octo {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

LinearForm divide(const LinearForm& x, const CDyadic& d) {
  LinearForm r{exact_div(x.constant(), d)};
  for (int a = 1; a <= LinearForm::kSymbols; ++a) r.set_coeff(a, exact_div(x.coeff(a), d));
  return r;
}

Matrix8 plane_product(int k, int l, const BetaSet& betas) {
  if (k < 1 || k > 8 || l < 1 || l > 8) {
    throw std::out_of_range("rotation plane (" + std::to_string(k) + "," + std::to_string(l) + ") not in 1..8");
  }
  if (k == l) throw std::invalid_argument("k = l is not a rotation plane");
  return betas[k] * betas[l];
}

}  // namespace

SymMatrix8 assemble_X(const BetaSet& betas) {
  SymMatrix8 X;
  for (int A = 1; A <= 8; ++A) {
    const Matrix8& b = betas[A];
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (!b(i, j).is_zero()) X(i, j) += LinearForm::symbol(A) * b(i, j);
  }
  return X;
}

StructureMismatch::StructureMismatch(std::vector<BlockMismatch> cells)
    : std::runtime_error("matrix is not of the form [[A, B†], [B, -A]] (" + std::to_string(cells.size()) +
                         " offending cells)"),
      cells_(std::move(cells)) {}

BlockDecomp block_decompose(const SymMatrix8& X) {
  BlockDecomp d{block(X, 0, 0), block(X, 1, 0)};
  const SymMatrix8 expected = reassemble(d);
  std::vector<BlockMismatch> bad;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto r = static_cast<std::size_t>(i);
      const auto c = static_cast<std::size_t>(j);
      if (expected(r, c) != X(r, c)) bad.push_back({i, j, expected(r, c), X(r, c)});
    }
  if (!bad.empty()) throw StructureMismatch(std::move(bad));
  return d;
}

SymMatrix8 reassemble(const BlockDecomp& d) { return assemble(d.A, d.B.adjoint(), d.B, -d.A); }

Matrix8 rotation_operator(int k, int l, const Dyadic& theta, const BetaSet& betas) {
  return Matrix8::identity() + scale(CDyadic{theta}, plane_product(k, l, betas));
}

bool ScaledSymMatrix::equals(const SymMatrix8& m) const { return numerator == scale(denominator, m); }

ComplexMatrix8 ScaledSymMatrix::evaluate(const std::array<double, 8>& f) const {
  ComplexMatrix8 r = substitute(numerator, f);
  const std::complex<double> d = denominator.approx();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) r(i, j) /= d;
  return r;
}

ScaledSymMatrix conjugate_exact(const ScaledSymMatrix& X, const Matrix8& M) {
  const CDyadic det = determinant(M);
  if (det.is_zero()) throw SingularRotation("rotation operator is singular (det = 0)");
  const Matrix8 adj = adjugate(M);
  return {M * X.numerator * adj, X.denominator * det};
}

ScaledSymMatrix conjugate_exact(const SymMatrix8& X, const Matrix8& M) {
  return conjugate_exact(ScaledSymMatrix{X, CDyadic{1}}, M);
}

ScaledSymMatrix rotate_exact(const SymMatrix8& X, int k, int l, const Dyadic& theta, const BetaSet& betas) {
  return conjugate_exact(X, rotation_operator(k, l, theta, betas));
}

FirstOrder rotate_first_order(const SymMatrix8& X, int k, int l, const Dyadic& theta, const BetaSet& betas) {
  const Matrix8 n = plane_product(k, l, betas);
  SymMatrix8 delta = scale(CDyadic{theta}, commutator(n, X));
  return {X + delta, std::move(delta)};
}

Projection extract_components(const SymMatrix8& Xp, const BetaSet& betas) {
  const Matrix8 g = gram(betas);
  if (determinant(g).is_zero()) {
    throw DegenerateBasis("Gram matrix of the " + to_string(betas.variant) + " β set is singular");
  }
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      if (a != b && !g(a, b).is_zero()) {
        throw DegenerateBasis("β set is not trace-orthogonal; projection needs a diagonal Gram matrix");
      }
  Projection p;
  SymMatrix8 span;
  for (int A = 1; A <= 8; ++A) {
    LinearForm c = divide((betas[A] * Xp).trace(), g(idx(A), idx(A)));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (!betas[A](i, j).is_zero()) span(i, j) += c * betas[A](i, j);
    p.components[idx(A)] = std::move(c);
  }
  p.residual = Xp - span;
  return p;
}

ComponentMap component_map(int k, int l, const BetaSet& betas) {
  const Matrix8 n = plane_product(k, l, betas);
  Projection p = extract_components(commutator(n, assemble_X(betas)), betas);
  return {p.components, p.residual};
}

std::vector<ComponentLineDiff> diff_component_maps(const ComponentMap& derived,
                                                   const std::array<LinearForm, 8>& stated) {
  std::vector<ComponentLineDiff> out;
  for (int A = 1; A <= 8; ++A) {
    const LinearForm& d = derived.increments[idx(A)];
    const LinearForm& s = stated[idx(A)];
    out.push_back({A, d, s, d == s, !d.is_real(), !s.is_real()});
  }
  return out;
}

std::string render_component_line(int index, const LinearForm& increment) {
  const std::string f = "f" + std::to_string(index);
  if (increment.is_zero()) return f + "' = " + f;
  return f + "' = " + f + " + θ·(" + increment.str() + ")";
}

RotationClasses duplicate_rotation_scan(const BetaSet& betas) {
  RotationClasses out;
  std::vector<Matrix8> reps;
  for (int k = 1; k <= 8; ++k) {
    for (int l = k + 1; l <= 8; ++l) {
      const Matrix8 p = betas[k] * betas[l];
      auto it = std::find(reps.begin(), reps.end(), p);
      if (it == reps.end()) {
        reps.push_back(p);
        out.classes.push_back({{k, l}});
      } else {
        out.classes[static_cast<std::size_t>(it - reps.begin())].emplace_back(k, l);
      }
    }
  }
  // Pairs are visited lexicographically, so (1,2) opens the first class.
  out.class_of_12 = 0;
  return out;
}

double first_order_defect(const SymMatrix8& X, int k, int l, const Dyadic& theta, const std::array<double, 8>& f,
                          const BetaSet& betas) {
  const ComplexMatrix8 exact = rotate_exact(X, k, l, theta, betas).evaluate(f);
  const ComplexMatrix8 first = substitute(rotate_first_order(X, k, l, theta, betas).result, f);
  return max_abs(exact - first);
}

}  // namespace octo
