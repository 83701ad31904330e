#pragma once

// Octonions over a scalar ring S. Multiplication is the bilinear extension of
// a StructureTable; the default table is the one this project transcribes in
// fixtures/table2.txt, entered here as data.

#include "octo/dyadic.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

/// ±e_index (or ±E_index).
struct SignedIndex {
  int sign = 1;
  int index = 0;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// Complete 8x8 multiplication table of basis units: cell (a,b) = e_a e_b.
class StructureTable {
public:
  StructureTable() = default;
  explicit StructureTable(const std::array<SignedIndex, 64>& cells) : cells_(cells) {}

  const SignedIndex& operator()(int a, int b) const { return cells_[static_cast<std::size_t>(a * 8 + b)]; }
  const std::array<SignedIndex, 64>& cells() const { return cells_; }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

  /// Unordered triples {a,b,c} of imaginary units with e_a e_b = +e_c, a<b.
  std::vector<std::array<int, 3>> positive_triples() const;

private:
  std::array<SignedIndex, 64> cells_{};
};

/// The octonion table as transcribed from the source tables.
const StructureTable& builtin_table();

/// Structural invariants of a table, one message per violation (empty = ok):
/// identity row/column, e_a e_a = -e0, off-diagonal antisymmetry.
std::vector<std::string> table_violations(const StructureTable& t);

template <typename S>
class Octonion {
public:
  Octonion() = default;
  explicit Octonion(const std::array<S, 8>& c) : c_(c) {}

  /// coefficient * e_index.
  static Octonion unit(int index, S coefficient = S{1}) {
    Octonion o;
    o.c_[static_cast<std::size_t>(index)] = std::move(coefficient);
    return o;
  }

  const S& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  S& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::array<S, 8>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == S{})) return false;
    return true;
  }

  Octonion operator-() const {
    Octonion r;
    for (std::size_t k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
  }
  Octonion& operator+=(const Octonion& o) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }

  friend Octonion operator*(const S& s, const Octonion& o) {
    Octonion r;
    for (std::size_t k = 0; k < 8; ++k) r.c_[k] = s * o.c_[k];
    return r;
  }

  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

private:
  std::array<S, 8> c_{};
};

using RealOctonion = Octonion<Dyadic>;
using Bioctonion = Octonion<CDyadic>;
using ApproxBioctonion = Octonion<std::complex<double>>;

template <typename S>
Octonion<S> oct_mul(const Octonion<S>& a, const Octonion<S>& b,
                    const StructureTable& t = builtin_table()) {
  Octonion<S> r;
  for (int i = 0; i < 8; ++i) {
    if (a[i] == S{}) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == S{}) continue;
      const SignedIndex& cell = t(i, j);
      S p = a[i] * b[j];
      if (cell.sign < 0) {
        r[cell.index] -= p;
      } else {
        r[cell.index] += p;
      }
    }
  }
  return r;
}

/// Negates the imaginary coefficients (the scalar coefficients are untouched,
/// so for bioctonions this is not complex conjugation).
template <typename S>
Octonion<S> oct_conj(const Octonion<S>& a) {
  Octonion<S> r = -a;
  r[0] = a[0];
  return r;
}

/// Σ c_k^2. For real octonions this is the Euclidean norm N(x); for
/// bioctonions it is the complex bilinear quadratic form, which vanishes on
/// nonzero zero divisors such as ½(e0 + i e7).
template <typename S>
S quadratic_norm(const Octonion<S>& a) {
  S r{};
  for (int k = 0; k < 8; ++k) r += a[k] * a[k];
  return r;
}

inline Dyadic oct_norm(const RealOctonion& a) { return quadratic_norm(a); }

/// Nonzero element with vanishing quadratic norm: cannot be inverted.
inline bool is_null(const Bioctonion& a) { return !a.is_zero() && quadratic_norm(a).is_zero(); }

/// (ab)c - a(bc).
template <typename S>
Octonion<S> associator(const Octonion<S>& a, const Octonion<S>& b, const Octonion<S>& c,
                       const StructureTable& t = builtin_table()) {
  return oct_mul(oct_mul(a, b, t), c, t) - oct_mul(a, oct_mul(b, c, t), t);
}

/// `1/2e0+1/2i*e7`-style rendering in the e-basis; `0` when zero.
std::string to_string(const Bioctonion& x, char unit = 'e');
std::string to_string(const RealOctonion& x, char unit = 'e');
/// Decimal rendering, `precision` significant digits.
std::string to_string(const ApproxBioctonion& x, int precision = 12, char unit = 'e');

inline Bioctonion complexify(const RealOctonion& x) {
  Bioctonion r;
  for (int k = 0; k < 8; ++k) r[k] = CDyadic{x[k]};
  return r;
}

/// The split basis u0,u1,u2,u3 and u0*,u1*,u2*,u3* as bioctonions:
/// u0 = ½(e0 + i e7), u_m = ½(e_m + i e_{m+3}), starred forms with -i.
struct SplitBasis {
  std::array<Bioctonion, 4> u;
  std::array<Bioctonion, 4> ustar;
};

SplitBasis build_split_basis();

/// One evaluated identity of the split algebra.
struct RelationCheck {
  std::string name;  // e.g. "u1*u2 = u3*"
  Bioctonion lhs;
  Bioctonion rhs;
  bool confirmed = false;
};

/// Evaluates every identity family of the split-octonion algebra for all
/// i,j in {1,2,3} plus the u0 absorption/annihilation/idempotence laws.
std::vector<RelationCheck> verify_split_relations(const SplitBasis& basis,
                                                  const StructureTable& t = builtin_table());

/// Parse an 8x8 grid of signed tokens with the given unit letter
/// (`e3`, `-e0`, `+E5`). Throws ParseError with line/column.
StructureTable parse_structure_table(std::string_view text, char unit = 'e');
/// Parse a single `-e3` token.
SignedIndex parse_signed_index(std::string_view token, char unit, int line = 0, int column = 1);

std::string to_string(const SignedIndex& s, char unit = 'e');

}  // namespace octo
