#include "octo/expm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace octo {

namespace {

double max_row_sum(const ComplexMatrix8& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 8; ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

ComplexMatrix8 expm(const ComplexMatrix8& X, const ExpOptions& opts) {
  for (const auto& z : X.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw NonFiniteInput("matrix has non-finite entries");
  }
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  int s = 0;
  const double norm = max_row_sum(X);
  while (std::ldexp(norm, -s) > 0.5) ++s;
  const ComplexMatrix8 A = scale(std::complex<double>(std::ldexp(1.0, -s)), X);

  ComplexMatrix8 sum = ComplexMatrix8::identity();
  ComplexMatrix8 term = sum;
  bool converged = false;
  for (int k = 1; k <= opts.max_terms; ++k) {
    term = scale(std::complex<double>(1.0 / k), term * A);
    if (max_abs(term) < opts.tol) {
      converged = true;
      break;
    }
    sum += term;
  }
  if (!converged) {
    throw ConvergenceError("Taylor series did not reach tolerance within " + std::to_string(opts.max_terms) +
                           " terms");
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

double unitarity_defect(const ComplexMatrix8& U) {
  return max_abs(U.adjoint() * U - ComplexMatrix8::identity());
}

double hermiticity_defect(const ComplexMatrix8& U) { return max_abs(U - U.adjoint()); }

Spinor octonion_spinor() {
  Spinor psi;
  for (int k = 0; k < 8; ++k) psi[static_cast<std::size_t>(k)] = Bioctonion::unit(k);
  return psi;
}

ApproxBioctonion approximate(const Bioctonion& x) {
  ApproxBioctonion r;
  for (int k = 0; k < 8; ++k) r[k] = x[k].to_complex();
  return r;
}

ApproxSpinor apply(const ComplexMatrix8& M, const Spinor& psi) {
  ApproxSpinor out;
  std::array<ApproxBioctonion, 8> p;
  for (std::size_t j = 0; j < 8; ++j) p[j] = approximate(psi[j]);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (M(i, j) != std::complex<double>{}) out[i] += M(i, j) * p[j];
  return out;
}

ApproxSpinor spinor_transform(const Spinor& psi, const ComplexMatrix8& X, const ExpOptions& opts) {
  return octo::apply(expm(X, opts), psi);
}

}  // namespace octo
