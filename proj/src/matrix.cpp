#include "octo/matrix.hpp"

#include <algorithm>
#include <vector>

namespace octo {

double max_abs(const ComplexMatrix8& m) {
  double r = 0.0;
  for (const auto& z : m.data()) r = std::max(r, std::abs(z));
  return r;
}

namespace {

// Bareiss elimination on a row-major n x n block.
CDyadic bareiss_det(std::vector<CDyadic> a, std::size_t n) {
  if (n == 0) return CDyadic{1};
  auto at = [&](std::size_t r, std::size_t c) -> CDyadic& { return a[r * n + c]; };
  CDyadic prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && at(p, k).is_zero()) ++p;
      if (p == n) return CDyadic{};
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = exact_div(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
      }
      at(i, k) = CDyadic{};
    }
    prev = at(k, k);
  }
  CDyadic d = at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

template <std::size_t N>
CDyadic determinant(SquareMatrix<CDyadic, N> m) {
  return bareiss_det(std::vector<CDyadic>(m.data().begin(), m.data().end()), N);
}

template <std::size_t N>
SquareMatrix<CDyadic, N> adjugate(const SquareMatrix<CDyadic, N>& m) {
  SquareMatrix<CDyadic, N> adj;
  std::vector<CDyadic> minor((N - 1) * (N - 1));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < N; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < N; ++j) {
          if (j == c) continue;
          minor[k++] = m(i, j);
        }
      }
      CDyadic cof = bareiss_det(minor, N - 1);
      // adj is the transposed cofactor matrix.
      adj(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

template CDyadic determinant<4>(SquareMatrix<CDyadic, 4>);
template CDyadic determinant<8>(SquareMatrix<CDyadic, 8>);
template SquareMatrix<CDyadic, 8> adjugate<8>(const SquareMatrix<CDyadic, 8>&);

}  // namespace octo
