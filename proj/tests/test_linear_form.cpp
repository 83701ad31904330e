#include "octo/linear_form.hpp"
#include "octo/parse.hpp"

#include <doctest.h>

#include <random>

using namespace octo;

TEST_CASE("linear form rendering is canonical") {
  const LinearForm x = -LinearForm::symbol(4) - CDyadic::i() * LinearForm::symbol(2);
  CHECK(x.str() == "-i*f2-f4");
  CHECK((CDyadic(2) * LinearForm::symbol(8)).str() == "2*f8");
  CHECK((CDyadic(Dyadic(0), Dyadic(-2)) * LinearForm::symbol(2)).str() == "-2*i*f2");
  CHECK((CDyadic(Dyadic(1), Dyadic(1)) * LinearForm::symbol(3)).str() == "(1+i)*f3");
  CHECK(LinearForm{}.str() == "0");
  CHECK((LinearForm::symbol(1) + LinearForm(CDyadic::half())).str() == "f1+1/2");
}

TEST_CASE("parser accepts the fixture grammar") {
  CHECK(parse_linear_form("-(f4+i*f2)") == -LinearForm::symbol(4) - CDyadic::i() * LinearForm::symbol(2));
  CHECK(parse_linear_form("-2*i*(f4+i*f2)") == CDyadic(2) * LinearForm::symbol(2) - CDyadic(Dyadic(0), Dyadic(2)) * LinearForm::symbol(4));
  CHECK(parse_linear_form("1/2i") == LinearForm(CDyadic(Dyadic(0), Dyadic::pow2(1))));
  CHECK(parse_linear_form("f3 - f1").str() == "-f1+f3");
  CHECK_THROWS_AS(parse_linear_form("f1*f2"), ParseError);
  CHECK_THROWS_AS(parse_linear_form("f9"), ParseError);
  CHECK_THROWS_AS(parse_linear_form("1/3*f1"), ParseError);
  try {
    parse_linear_form("f1+*f2", 4, 9);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 9);
  }
}

TEST_CASE("render and parse round-trip on random forms") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> v(-9, 9);
  std::uniform_int_distribution<int> e(0, 3);
  for (int n = 0; n < 300; ++n) {
    LinearForm x(CDyadic(Dyadic(v(rng)).ldexp(-e(rng)), Dyadic(v(rng))));
    for (int A = 1; A <= 8; ++A) x.set_coeff(A, CDyadic(Dyadic(v(rng)).ldexp(-e(rng)), Dyadic(v(rng)).ldexp(-e(rng))));
    CHECK(parse_linear_form(x.str()) == x);
  }
}

TEST_CASE("conjugation treats the symbols as real") {
  const LinearForm x = parse_linear_form("f4-i*f2+i");
  CHECK(x.conj() == parse_linear_form("f4+i*f2-i"));
  CHECK(!x.is_real());
  CHECK(parse_linear_form("2*f1-f8").is_real());
  const std::array<double, 8> f = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(x.evaluate(f) == std::complex<double>(4, -1));
}

TEST_CASE("hermitian_symbolic and substitution") {
  SymMatrix8 m;
  m(0, 1) = parse_linear_form("f1-i*f2");
  m(1, 0) = parse_linear_form("f1+i*f2");
  m(2, 2) = parse_linear_form("f3");
  CHECK(hermitian_symbolic(m));
  m(2, 2) = parse_linear_form("i*f3");
  CHECK(!hermitian_symbolic(m));

  std::array<CDyadic, 8> f{};
  f[0] = 2;
  f[1] = 1;
  const Matrix8 s = substitute(m, f);
  CHECK(s(0, 1) == CDyadic(Dyadic(2), Dyadic(-1)));
  CHECK(lift(s)(0, 1) == LinearForm(s(0, 1)));
}

TEST_CASE("determinant and adjugate by fraction-free elimination") {
  // [[2,1],[1,1]] ⊗ I4-like block matrix with a known inverse.
  Matrix8 m = Matrix8::identity();
  m(0, 0) = 2;
  m(0, 7) = 1;
  m(7, 0) = 1;
  CHECK(determinant(m) == CDyadic(1));
  const Matrix8 adj = adjugate(m);
  CHECK((m * adj).is_identity());

  // Rotation-like I + θN with N² = -I has det (1+θ²)^4.
  Matrix8 n;
  for (std::size_t k = 0; k < 4; ++k) {
    n(k, k + 4) = -1;
    n(k + 4, k) = 1;
  }
  const CDyadic theta = Dyadic::pow2(2);
  const Matrix8 r = Matrix8::identity() + scale(theta, n);
  const CDyadic one_plus = CDyadic(1) + theta * theta;
  CHECK(determinant(r) == one_plus * one_plus * one_plus * one_plus);
  CHECK(r * adjugate(r) == scale(determinant(r), Matrix8::identity()));

  Matrix8 singular = Matrix8::identity();
  singular(3, 3) = 0;
  CHECK(determinant(singular).is_zero());
}

TEST_CASE("mixed products and block assembly") {
  const Matrix4 p = Matrix4::identity();
  SymMatrix4 a;
  a(0, 0) = LinearForm::symbol(8);
  const SymMatrix8 full = assemble(a, -a, a, a);
  CHECK(block(full, 0, 1) == -a);
  CHECK(block(full, 1, 1) == a);
  CHECK(p * a == a);
  CHECK(full.trace() == CDyadic(2) * LinearForm::symbol(8));
}
