#pragma once

#include "octo/dyadic.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <utility>

namespace octo {

/// Dense N x N matrix over an entry type E. Indices are 0-based here; the
/// user-facing (1-based) Σ_mn / β_A helpers translate at the boundary.
///
/// E must be default-constructible to zero and support +, -, unary -.
/// Mixed-type products work whenever `A * B` is defined for the entries.
template <typename E, std::size_t N>
class SquareMatrix {
public:
  using value_type = E;
  static constexpr std::size_t dim = N;

  SquareMatrix() = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = E{1};
    return m;
  }

  E& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

  const std::array<E, N * N>& data() const { return a_; }
  std::array<E, N * N>& data() { return a_; }

  SquareMatrix operator-() const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = -a_[k];
    return r;
  }
  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.a_ == b.a_; }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

  /// Conjugate transpose. Requires a `conj(E)` overload.
  SquareMatrix adjoint() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(j, i) = conj((*this)(i, j));
    return r;
  }

  SquareMatrix transpose() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  E trace() const {
    E t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_hermitian() const { return *this == adjoint(); }
  bool is_identity() const { return *this == identity(); }
  bool is_zero() const { return *this == SquareMatrix{}; }

private:
  std::array<E, N * N> a_{};
};

template <typename A, typename B, std::size_t N>
auto operator*(const SquareMatrix<A, N>& x, const SquareMatrix<B, N>& y) {
  using R = decltype(std::declval<A>() * std::declval<B>());
  SquareMatrix<R, N> r;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      const A& xik = x(i, k);
      if (xik == A{}) continue;
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

template <typename S, typename E, std::size_t N>
SquareMatrix<E, N> scale(const S& s, const SquareMatrix<E, N>& m) {
  SquareMatrix<E, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = m(i, j) * s;
  return r;
}

/// [a, b] = ab - ba.
template <typename A, typename B, std::size_t N>
auto commutator(const SquareMatrix<A, N>& a, const SquareMatrix<B, N>& b) {
  return a * b - b * a;
}

template <typename E, std::size_t N>
SquareMatrix<E, N / 2> block(const SquareMatrix<E, N>& m, std::size_t br, std::size_t bc) {
  constexpr std::size_t H = N / 2;
  SquareMatrix<E, H> r;
  for (std::size_t i = 0; i < H; ++i)
    for (std::size_t j = 0; j < H; ++j) r(i, j) = m(br * H + i, bc * H + j);
  return r;
}

/// [[tl, tr], [bl, br]].
template <typename E, std::size_t H>
SquareMatrix<E, 2 * H> assemble(const SquareMatrix<E, H>& tl, const SquareMatrix<E, H>& tr,
                                const SquareMatrix<E, H>& bl, const SquareMatrix<E, H>& br) {
  SquareMatrix<E, 2 * H> r;
  for (std::size_t i = 0; i < H; ++i) {
    for (std::size_t j = 0; j < H; ++j) {
      r(i, j) = tl(i, j);
      r(i, j + H) = tr(i, j);
      r(i + H, j) = bl(i, j);
      r(i + H, j + H) = br(i, j);
    }
  }
  return r;
}

using Matrix2 = SquareMatrix<CDyadic, 2>;
using Matrix4 = SquareMatrix<CDyadic, 4>;
using Matrix8 = SquareMatrix<CDyadic, 8>;
using ComplexMatrix8 = SquareMatrix<std::complex<double>, 8>;

/// Largest entry magnitude.
double max_abs(const ComplexMatrix8& m);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every intermediate is a minor of `m`, so the divisions are exact.
template <std::size_t N>
CDyadic determinant(SquareMatrix<CDyadic, N> m);

/// Adjugate: adj(m) * m = m * adj(m) = det(m) * I.
template <std::size_t N>
SquareMatrix<CDyadic, N> adjugate(const SquareMatrix<CDyadic, N>& m);

extern template CDyadic determinant<4>(SquareMatrix<CDyadic, 4>);
extern template CDyadic determinant<8>(SquareMatrix<CDyadic, 8>);
extern template SquareMatrix<CDyadic, 8> adjugate<8>(const SquareMatrix<CDyadic, 8>&);

}  // namespace octo
