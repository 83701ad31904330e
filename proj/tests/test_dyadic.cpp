#include "octo/dyadic.hpp"
#include "octo/parse.hpp"

#include <doctest.h>

#include <random>

using octo::CDyadic;
using octo::Dyadic;

namespace {

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<int> exp(0, 12);
  return Dyadic(num(rng)).ldexp(-exp(rng));
}

CDyadic random_cdyadic(std::mt19937_64& rng) { return {random_dyadic(rng), random_dyadic(rng)}; }

}  // namespace

TEST_CASE("dyadic values are normalized") {
  const Dyadic d(mpz_class(12), 4);  // 12/16 = 3/4
  CHECK(d.numerator() == 3);
  CHECK(d.exponent() == 2);
  CHECK(Dyadic(mpz_class(0), 7).exponent() == 0);
  CHECK(Dyadic::pow2(3) == Dyadic(mpz_class(1), 3));
  CHECK(Dyadic(6).ldexp(-1) == Dyadic(3));
}

TEST_CASE("dyadic rendering") {
  CHECK(Dyadic(3).str() == "3");
  CHECK((-Dyadic::pow2(1)).str() == "-1/2");
  CHECK(Dyadic(5).ldexp(-3).str() == "5/8");
  CHECK(CDyadic::i().str() == "i");
  CHECK((-CDyadic::i()).str() == "-i");
  CHECK(CDyadic(-Dyadic::pow2(1), Dyadic::pow2(1)).str() == "-1/2+1/2i");
  CHECK(CDyadic{}.str() == "0");
  CHECK(CDyadic(Dyadic(0), Dyadic(-3)).str() == "-3i");
}

TEST_CASE("canonical tokens round-trip through the parser") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    const CDyadic z = random_cdyadic(rng);
    CHECK(octo::parse_cdyadic(z.str()) == z);
    CHECK(octo::parse_dyadic(z.re().str()) == z.re());
  }
  CHECK_THROWS_AS(octo::parse_dyadic("1/3"), octo::ParseError);
  CHECK_THROWS_AS(octo::parse_cdyadic("x"), octo::ParseError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int n = 0; n < 1000; ++n) {
    const CDyadic a = random_cdyadic(rng);
    const CDyadic b = random_cdyadic(rng);
    const CDyadic c = random_cdyadic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == CDyadic{});
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).re() == a.norm2());
  }
}

TEST_CASE("exact division stays in the ring or throws") {
  const CDyadic one_plus_i(Dyadic(1), Dyadic(1));
  CHECK(octo::exact_div(CDyadic(2), one_plus_i) == CDyadic(Dyadic(1), Dyadic(-1)));
  CHECK(octo::exact_div(CDyadic(3), CDyadic(4)) == CDyadic(Dyadic(3).ldexp(-2)));
  CHECK_THROWS_AS(octo::exact_div(CDyadic(1), CDyadic(3)), std::domain_error);
  CHECK_THROWS_AS(octo::exact_div(CDyadic(1), CDyadic{}), std::domain_error);
}

TEST_CASE("conversion to double is exact or refuses") {
  CHECK(Dyadic(-3).ldexp(-5).to_double() == -3.0 / 32.0);
  CHECK(Dyadic::pow2(1074).to_double() == 0x1p-1074);
  mpz_class wide = 1;
  wide <<= 60;
  wide += 1;  // 61 significant bits
  CHECK_THROWS_AS(Dyadic(wide, 0).to_double(), std::overflow_error);
  CHECK(Dyadic(wide, 0).approx() == 0x1p60);
}
