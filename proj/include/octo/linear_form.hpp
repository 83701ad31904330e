#pragma once

#include "octo/dyadic.hpp"
#include "octo/matrix.hpp"

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace octo {

/// c + Σ_A coeff[A] * f_{A+1}, with the symbols f1..f8 taken as real.
class LinearForm {
public:
  static constexpr int kSymbols = 8;

  LinearForm() = default;
  LinearForm(CDyadic constant) : constant_(std::move(constant)) {}  // NOLINT
  LinearForm(long constant) : constant_(constant) {}                // NOLINT

  /// The form `f_index` (index is 1-based, 1..8).
  static LinearForm symbol(int index);

  const CDyadic& constant() const { return constant_; }
  /// Coefficient of f_index, 1-based.
  const CDyadic& coeff(int index) const { return coeffs_.at(static_cast<std::size_t>(index - 1)); }
  void set_coeff(int index, CDyadic c) { coeffs_.at(static_cast<std::size_t>(index - 1)) = std::move(c); }

  bool is_zero() const;
  /// All coefficients (and the constant) have zero imaginary part.
  bool is_real() const;

  /// Complex conjugate of the form with real f symbols.
  LinearForm conj() const;

  CDyadic evaluate(const std::array<CDyadic, 8>& f) const;
  std::complex<double> evaluate(const std::array<double, 8>& f) const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const CDyadic& s);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const CDyadic& s) { return a *= s; }
  friend LinearForm operator*(const CDyadic& s, LinearForm a) { return a *= s; }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }

  /// Canonical token with no whitespace: `-f4-i*f2`, `2*f8`, `(1+i)*f3`, `0`.
  std::string str() const;

private:
  std::array<CDyadic, 8> coeffs_{};
  CDyadic constant_;
};

inline LinearForm conj(const LinearForm& x) { return x.conj(); }

/// Parse a form in f1..f8. `line`/`column` locate the token for diagnostics.
LinearForm parse_linear_form(std::string_view text, int line = 0, int column = 1);

using SymMatrix8 = SquareMatrix<LinearForm, 8>;
using SymMatrix4 = SquareMatrix<LinearForm, 4>;

/// Entry (j,i) is the conjugate form of entry (i,j).
bool hermitian_symbolic(const SymMatrix8& m);

/// Numeric substitution of the f symbols.
ComplexMatrix8 substitute(const SymMatrix8& m, const std::array<double, 8>& f);
Matrix8 substitute(const SymMatrix8& m, const std::array<CDyadic, 8>& f);

/// Lift an exact constant matrix into the symbolic entry type.
template <std::size_t N>
SquareMatrix<LinearForm, N> lift(const SquareMatrix<CDyadic, N>& m) {
  SquareMatrix<LinearForm, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = LinearForm{m(i, j)};
  return r;
}

}  // namespace octo
