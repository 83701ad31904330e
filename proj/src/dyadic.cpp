#include "octo/dyadic.hpp"

#include "octo/parse.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace octo {

Dyadic::Dyadic(mpz_class numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

Dyadic Dyadic::pow2(int k) { return Dyadic{1}.ldexp(-k); }

void Dyadic::normalize() {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto tz = static_cast<std::uint32_t>(mpz_scan1(num_.get_mpz_t(), 0));
  const std::uint32_t shift = std::min(tz, exp_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

Dyadic Dyadic::ldexp(int k) const {
  Dyadic r = *this;
  if (r.is_zero()) return r;
  if (k >= 0) {
    const auto uk = static_cast<std::uint32_t>(k);
    if (uk <= r.exp_) {
      r.exp_ -= uk;
    } else {
      mpz_mul_2exp(r.num_.get_mpz_t(), r.num_.get_mpz_t(), uk - r.exp_);
      r.exp_ = 0;
    }
  } else {
    r.exp_ += static_cast<std::uint32_t>(-k);
  }
  r.normalize();
  return r;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  const auto bits = static_cast<long>(mpz_sizeinbase(num_.get_mpz_t(), 2));
  const auto tz = static_cast<long>(mpz_scan1(num_.get_mpz_t(), 0));
  const long low = tz - static_cast<long>(exp_);  // exponent of the lowest set bit
  const long top = bits - 1 - static_cast<long>(exp_);
  if (bits - tz > std::numeric_limits<double>::digits || top > 1023 || low < -1074) {
    throw std::overflow_error("dyadic " + str() + " does not fit binary64 exactly");
  }
  long e = 0;
  const double m = mpz_get_d_2exp(&e, num_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e - static_cast<long>(exp_)));
}

double Dyadic::approx() const {
  if (is_zero()) return 0.0;
  long e = 0;
  const double m = mpz_get_d_2exp(&e, num_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e - static_cast<long>(exp_)));
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (exp_ == rhs.exp_) {
    num_ += rhs.num_;
  } else if (exp_ > rhs.exp_) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), rhs.num_.get_mpz_t(), exp_ - rhs.exp_);
    num_ += t;
  } else {
    mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), rhs.exp_ - exp_);
    num_ += rhs.num_;
    exp_ = rhs.exp_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  num_ *= rhs.num_;
  exp_ += rhs.exp_;
  normalize();
  return *this;
}

bool operator<(const Dyadic& a, const Dyadic& b) { return (a - b).sign() < 0; }

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.get_str();
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
  return num_.get_str() + "/" + den.get_str();
}

CDyadic& CDyadic::operator+=(const CDyadic& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

CDyadic& CDyadic::operator-=(const CDyadic& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

CDyadic& CDyadic::operator*=(const CDyadic& rhs) {
  Dyadic re = re_ * rhs.re_ - im_ * rhs.im_;
  Dyadic im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string CDyadic::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Dyadic{1}) {
    imag = "i";
  } else if (im_ == Dyadic{-1}) {
    imag = "-i";
  } else {
    imag = im_.str() + "i";
  }
  if (re_.is_zero()) return imag;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

namespace {

// Exact quotient of a dyadic by a nonzero dyadic, or throw.
Dyadic divide(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return {};
  // a / b = (na / nb) * 2^(eb - ea); strip powers of two from nb first.
  mpz_class nb = b.numerator();
  const auto tz = static_cast<int>(mpz_scan1(nb.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(nb.get_mpz_t(), nb.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
  if (!mpz_divisible_p(a.numerator().get_mpz_t(), nb.get_mpz_t())) {
    throw std::domain_error("quotient " + a.str() + " / " + b.str() + " is not dyadic");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.numerator().get_mpz_t(), nb.get_mpz_t());
  const int shift = static_cast<int>(b.exponent()) - static_cast<int>(a.exponent()) - tz;
  return Dyadic{q, 0}.ldexp(shift);
}

}  // namespace

CDyadic exact_div(const CDyadic& a, const CDyadic& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  const Dyadic n = b.norm2();
  const CDyadic t = a * b.conj();
  return {divide(t.re(), n), divide(t.im(), n)};
}

CDyadic parse_cdyadic(std::string_view text) {
  Affine a = parse_affine(text, {});
  return a.constant;
}

Dyadic parse_dyadic(std::string_view text) {
  CDyadic z = parse_cdyadic(text);
  if (!z.is_real()) throw ParseError("expected a real dyadic, got '" + std::string(text) + "'", 0, 1);
  return z.re();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }
std::ostream& operator<<(std::ostream& os, const CDyadic& z) { return os << z.str(); }

}  // namespace octo
