#include "octo/fixtures.hpp"
#include "octo/splitrep.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace octo;

namespace {

const FixtureStore& fixtures() {
  static const FixtureStore fx = load_fixtures(OCTO_SO8_TEST_FIXTURES);
  return fx;
}

SymMatrix4 random_block(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> v(-4, 4);
  SymMatrix4 m;
  for (auto& x : m.data()) {
    x = LinearForm(CDyadic(Dyadic(v(rng)), Dyadic(v(rng))));
    for (int A = 1; A <= 8; ++A) x.set_coeff(A, CDyadic(Dyadic(v(rng)).ldexp(-1), Dyadic(v(rng))));
  }
  return m;
}

}  // namespace

TEST_CASE("split spinor is the split basis") {
  const Spinor phi = build_split_spinor();
  const SplitBasis s = build_split_basis();
  for (std::size_t m = 0; m < 4; ++m) {
    CHECK(phi[m] == s.u[m]);
    CHECK(phi[m + 4] == s.ustar[m]);
  }
  CHECK(to_string(phi[1]) == "(1/2)e1 + (1/2i)e4");
  CHECK(to_string(phi[7]) == "(1/2)e3 - (1/2i)e6");
}

TEST_CASE("formal block arithmetic on random blocks") {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 100; ++n) {
    const SymMatrix4 A = random_block(rng);
    const SymMatrix4 B = random_block(rng);
    const SymMatrix4 C = random_block(rng);
    const SymMatrix4 D = random_block(rng);
    CHECK(assemble(A, A, B, B) + assemble(C, -C, D, -D) == assemble(A + C, A - C, B + D, B - D));
  }
}

TEST_CASE("Y audit against the derived blocks") {
  const BlockDecomp ab = block_decompose(assemble_X());
  const YAudit audit = audit_Y_blocks(fixtures().y, ab.A, ab.B);
  CHECK(audit.first_blocks.confirmed);
  CHECK(!audit.second_blocks.confirmed);
  REQUIRE(audit.second_blocks.cells.size() == 1);
  const BlockCellDiff& c = audit.second_blocks.cells[0];
  CHECK(c.block == "TR");
  CHECK(c.row == 3);
  CHECK(c.col == 3);
  CHECK(c.actual == -LinearForm::symbol(8));
  CHECK(!audit.stated_sum.confirmed);
  CHECK(audit.b_minus_c.size() == 16);
  CHECK(!audit.all_confirmed());
}

TEST_CASE("the stated sum holds when B equals C") {
  const BlockDecomp ab = block_decompose(assemble_X());
  YFixture y = fixtures().y;
  y.C = ab.B;
  y.first = assemble(ab.A, ab.A, ab.B, ab.B);
  y.second = assemble(y.C, -y.C, y.D, -y.D);
  const YAudit audit = audit_Y_blocks(y, ab.A, ab.B);
  CHECK(audit.all_confirmed());
  CHECK(audit.b_minus_c.empty());
}

TEST_CASE("Y sources") {
  const BlockDecomp ab = block_decompose(assemble_X());
  const YFixture& y = fixtures().y;
  CHECK(y_matrix(YSource::Fixture, y, ab) == y.first + y.second);
  CHECK(y_matrix(YSource::Reconstructed, y, ab) == assemble(ab.A + y.C, ab.A - y.C, ab.B + y.D, ab.B - y.D));
  CHECK(to_string(YSource::Reconstructed) == "reconstructed");
}

TEST_CASE("split transform by the first summand with f8 only") {
  // Y1 = [[A, A], [0, 0]] with A = diag(a): e^Y1 = [[e^A, e^A - 1], [0, 1]].
  const double v = 0.75;
  std::array<double, 8> f{};
  f[7] = v;
  const ComplexMatrix8 Y = substitute(fixtures().y.first, f);
  const ExpOptions opts;
  const ApproxSpinor out = split_transform(build_split_spinor(), Y, opts);
  const SplitBasis s = build_split_basis();
  const double a[4] = {v, v, -v, -v};
  for (std::size_t j = 0; j < 4; ++j) {
    const ApproxBioctonion expected =
        std::exp(a[j]) * approximate(s.u[j]) + (std::exp(a[j]) - 1) * approximate(s.ustar[j]);
    for (int k = 0; k < 8; ++k) CHECK(std::abs(out[j][k] - expected[k]) <= 10 * opts.tol);
    for (int k = 0; k < 8; ++k) CHECK(std::abs(out[j + 4][k] - approximate(s.ustar[j])[k]) <= 10 * opts.tol);
  }

  const ApproxSpinor same = split_transform(build_split_spinor(), ComplexMatrix8{}, opts);
  for (std::size_t j = 0; j < 8; ++j) CHECK(same[j] == approximate(build_split_spinor()[j]));
}
