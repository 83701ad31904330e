#pragma once

// Exact scalars for the SO(8) toolkit: dyadic rationals n / 2^k and complex
// numbers whose parts are dyadic. Every constant that shows up in the beta,
// E, X and Y matrices lives in this ring, so no rounding ever happens.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octo {

/// Real dyadic rational numerator / 2^exponent, kept normalized
/// (exponent == 0 or numerator odd).
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class numerator, std::uint32_t exponent);

  /// 2^-k.
  static Dyadic pow2(int k);

  const mpz_class& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }

  bool is_zero() const { return sgn(num_) == 0; }
  int sign() const { return sgn(num_); }
  bool is_integer() const { return exp_ == 0; }

  /// Multiply by 2^k (k may be negative); always exact.
  Dyadic ldexp(int k) const;

  /// Exact conversion; throws std::overflow_error when the value does not fit
  /// binary64 without rounding.
  double to_double() const;
  /// Nearest binary64 value, for magnitudes printed next to exact results.
  double approx() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);

  /// `3`, `-1/2`, `5/8`.
  std::string str() const;

  /// Re-establishes the canonical form. Public so it can be property-tested.
  void normalize();

private:
  mpz_class num_{0};
  std::uint32_t exp_ = 0;
};

/// Complex number with dyadic real and imaginary parts.
class CDyadic {
public:
  CDyadic() = default;
  CDyadic(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  CDyadic(Dyadic re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CDyadic(Dyadic re, Dyadic im) : re_(std::move(re)), im_(std::move(im)) {}

  static CDyadic i() { return {Dyadic{0}, Dyadic{1}}; }
  static CDyadic half() { return Dyadic::pow2(1); }

  const Dyadic& re() const { return re_; }
  const Dyadic& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CDyadic conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Dyadic norm2() const { return re_ * re_ + im_ * im_; }
  CDyadic ldexp(int k) const { return {re_.ldexp(k), im_.ldexp(k)}; }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::complex<double> approx() const { return {re_.approx(), im_.approx()}; }

  CDyadic operator-() const { return {-re_, -im_}; }
  CDyadic& operator+=(const CDyadic& rhs);
  CDyadic& operator-=(const CDyadic& rhs);
  CDyadic& operator*=(const CDyadic& rhs);

  friend CDyadic operator+(CDyadic a, const CDyadic& b) { return a += b; }
  friend CDyadic operator-(CDyadic a, const CDyadic& b) { return a -= b; }
  friend CDyadic operator*(CDyadic a, const CDyadic& b) { return a *= b; }

  friend bool operator==(const CDyadic& a, const CDyadic& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CDyadic& a, const CDyadic& b) { return !(a == b); }

  /// Canonical token: `-1/2+1/2i`, `i`, `-i`, `3/8`, `0`.
  std::string str() const;

private:
  Dyadic re_;
  Dyadic im_;
};

// Free-function spellings of the ring operations.
inline CDyadic cd_add(const CDyadic& a, const CDyadic& b) { return a + b; }
inline CDyadic cd_mul(const CDyadic& a, const CDyadic& b) { return a * b; }
inline CDyadic cd_conj(const CDyadic& a) { return a.conj(); }

inline CDyadic conj(const CDyadic& a) { return a.conj(); }
inline std::complex<double> conj(const std::complex<double>& a) { return std::conj(a); }

/// Exact quotient a / b in Z[1/2][i]. Throws std::domain_error when b is zero
/// or the quotient is not a complex dyadic.
CDyadic exact_div(const CDyadic& a, const CDyadic& b);

/// Parse a scalar token in the canonical grammar (`1/2`, `-i`, `1/2-3/4i`,
/// `2*i`). Throws ParseError.
CDyadic parse_cdyadic(std::string_view text);
Dyadic parse_dyadic(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Dyadic& d);
std::ostream& operator<<(std::ostream& os, const CDyadic& z);

}  // namespace octo
