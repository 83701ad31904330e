#include "octo/so8rot.hpp"

#include <doctest.h>

#include <cmath>

using namespace octo;

namespace {

template <std::size_t N>
SquareMatrix<LinearForm, N> sym(const char* const (&cells)[N][N]) {
  SquareMatrix<LinearForm, N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = parse_linear_form(cells[i][j]);
  return m;
}

// Blocks of X as printed next to the compact form.
const char* const kA[4][4] = {{"f8", "0", "-i*f6", "-f4-i*f2"},
                              {"0", "f8", "f4-i*f2", "i*f6"},
                              {"i*f6", "f4+i*f2", "-f8", "0"},
                              {"-f4+i*f2", "-i*f6", "0", "-f8"}};
const char* const kB[4][4] = {{"f7", "0", "f3-i*f5", "-i*f1"},
                              {"0", "f7", "-i*f1", "-f3+i*f5"},
                              {"-f3+i*f5", "i*f1", "-f7", "0"},
                              {"i*f1", "f3-i*f5", "0", "-f7"}};

}  // namespace

TEST_CASE("X decomposes into the printed A and B blocks") {
  const SymMatrix8 X = assemble_X();
  CHECK(X.trace().is_zero());
  CHECK(hermitian_symbolic(X));
  const BlockDecomp d = block_decompose(X);
  CHECK(d.A == sym(kA));
  CHECK(d.B == sym(kB));
  CHECK(reassemble(d) == X);
}

TEST_CASE("block_decompose lists the cells that break the compact form") {
  SymMatrix8 X = assemble_X();
  X(6, 6) = LinearForm::symbol(1);
  try {
    block_decompose(X);
    FAIL("expected StructureMismatch");
  } catch (const StructureMismatch& e) {
    REQUIRE(e.cells().size() == 1);
    CHECK(e.cells()[0].row == 6);
    CHECK(e.cells()[0].col == 6);
    CHECK(e.cells()[0].expected == LinearForm::symbol(8));
  }
}

TEST_CASE("rotation operator arguments") {
  CHECK_THROWS_AS(rotation_operator(1, 1, Dyadic(1)), std::invalid_argument);
  CHECK_THROWS_AS(rotation_operator(0, 2, Dyadic(1)), std::out_of_range);
  CHECK_THROWS_AS(rotation_operator(1, 9, Dyadic(1)), std::out_of_range);
  CHECK(rotation_operator(1, 2, Dyadic(0)).is_identity());
  const Matrix8 r = rotation_operator(1, 2, Dyadic::pow2(3));
  CHECK(r(0, 4) == CDyadic(-Dyadic::pow2(3)));
  CHECK(r(4, 0) == CDyadic(Dyadic::pow2(3)));
}

TEST_CASE("exact conjugation") {
  const SymMatrix8 X = assemble_X();
  const Dyadic theta = Dyadic::pow2(6);
  const Matrix8 M = rotation_operator(1, 2, theta);
  const ScaledSymMatrix r = rotate_exact(X, 1, 2, theta);
  // (M X M^-1) M = M X, scaled by det M.
  CHECK(r.numerator * M == scale(r.denominator, M * X));
  const CDyadic c = CDyadic(1) + CDyadic(theta * theta);
  CHECK(r.denominator == c * c * c * c);
  CHECK(rotate_exact(X, 3, 7, Dyadic(0)).equals(X));

  Matrix8 singular = Matrix8::identity();
  singular(2, 2) = 0;
  CHECK_THROWS_AS(conjugate_exact(X, singular), SingularRotation);
}

TEST_CASE("first-order increment") {
  const SymMatrix8 X = assemble_X();
  const FirstOrder fo = rotate_first_order(X, 1, 2, Dyadic(1));
  const Matrix8 n = canonical_betas()[1] * canonical_betas()[2];
  CHECK(fo.delta == n * X - X * n);
  CHECK(fo.result == X + fo.delta);

  std::array<double, 8> f;
  f.fill(1.0);
  const double e6 = first_order_defect(X, 1, 2, Dyadic::pow2(6), f);
  const double e7 = first_order_defect(X, 1, 2, Dyadic::pow2(7), f);
  CHECK(e6 / e7 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("component projection") {
  const SymMatrix8 X = assemble_X();
  const Projection p = extract_components(X);
  for (int A = 1; A <= 8; ++A) CHECK(p.components[static_cast<std::size_t>(A - 1)] == LinearForm::symbol(A));
  CHECK(p.residual.is_zero());
  CHECK_THROWS_AS(extract_components(X, build_beta_set(BetaVariant::TensorText)), DegenerateBasis);
}

TEST_CASE("first-order component map in the (1,2) plane") {
  const ComponentMap m = component_map(1, 2);
  const char* const expected[8] = {"2*f2", "-2*f1", "0", "0", "2*f6", "-2*f5", "2*f8", "-2*f7"};
  for (std::size_t A = 0; A < 8; ++A) CHECK(m.increments[A] == parse_linear_form(expected[A]));
  // [β1β2, X] has an f4 piece that no combination of β matrices absorbs.
  CHECK(!m.closes());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const LinearForm& r = m.residual(i, j);
      for (int A = 1; A <= 8; ++A)
        if (A != 4) CHECK(r.coeff(A).is_zero());
    }
  CHECK(render_component_line(3, m.increments[2]) == "f3' = f3");
  CHECK(render_component_line(1, m.increments[0]) == "f1' = f1 + θ·(2*f2)");
}

TEST_CASE("component map diff flags imaginary coefficients") {
  const ComponentMap m = component_map(1, 2);
  std::array<LinearForm, 8> stated = m.increments;
  stated[2] = parse_linear_form("2*i*f6");
  const auto d = diff_component_maps(m, stated);
  CHECK(d[0].match);
  CHECK(!d[2].match);
  CHECK(d[2].stated_imaginary);
  CHECK(!d[2].derived_imaginary);
}

TEST_CASE("planes sharing a generator") {
  const RotationClasses rc = duplicate_rotation_scan();
  std::size_t members = 0;
  for (const auto& c : rc.classes) members += c.size();
  CHECK(members == 28);
  const std::vector<std::pair<int, int>> c12 = {{1, 2}, {5, 6}, {7, 8}};
  CHECK(rc.classes[rc.class_of_12] == c12);
  const std::vector<std::vector<std::pair<int, int>>> multi_expected = {
      {{1, 2}, {5, 6}, {7, 8}}, {{1, 5}, {2, 6}}, {{1, 7}, {2, 8}}, {{5, 7}, {6, 8}}};
  std::vector<std::vector<std::pair<int, int>>> multi;
  for (const auto& c : rc.classes)
    if (c.size() > 1) multi.push_back(c);
  CHECK(multi == multi_expected);

  const ComponentMap m12 = component_map(1, 2);
  const ComponentMap m56 = component_map(5, 6);
  CHECK(m12.increments == m56.increments);
  CHECK(m12.residual == m56.residual);
}
