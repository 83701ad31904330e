#pragma once

// Numeric exponential action on spinors of bioctonions. This is the only
// place where binary64 arithmetic enters; everything upstream is exact.

#include "octo/matrix.hpp"
#include "octo/octonion.hpp"

#include <array>
#include <stdexcept>

namespace octo {

struct ExpOptions {
  double tol = 0x1p-40;  // stop once the next Taylor term is below this
  int max_terms = 64;
};

class NonFiniteInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scaling and squaring: X is scaled by 2^-s until its max-row-sum norm is at
/// most 1/2, the Taylor series is summed until the next term's largest entry
/// falls below tol, then the result is squared s times.
ComplexMatrix8 expm(const ComplexMatrix8& X, const ExpOptions& opts = {});

/// max |(U†U - I)_ij|; zero for unitary U.
double unitarity_defect(const ComplexMatrix8& U);
/// max |(U - U†)_ij|.
double hermiticity_defect(const ComplexMatrix8& U);

using Spinor = std::array<Bioctonion, 8>;
using ApproxSpinor = std::array<ApproxBioctonion, 8>;

/// ψ = (1, e1, ..., e7).
Spinor octonion_spinor();

ApproxBioctonion approximate(const Bioctonion& x);

/// ψ'_i = Σ_j M_ij ψ_j, scalar times bioctonion componentwise.
ApproxSpinor apply(const ComplexMatrix8& M, const Spinor& psi);

/// ψ' = e^X ψ.
ApproxSpinor spinor_transform(const Spinor& psi, const ComplexMatrix8& X, const ExpOptions& opts = {});

}  // namespace octo
