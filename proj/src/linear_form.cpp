#include "octo/linear_form.hpp"

#include "octo/parse.hpp"

namespace octo {

namespace {

const std::vector<std::string>& f_symbols() {
  static const std::vector<std::string> names = {"f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8"};
  return names;
}

// Coefficient prefix for `c * name`, including a leading '-' when negative.
std::string coefficient_prefix(const CDyadic& c) {
  if (c == CDyadic{1}) return "";
  if (c == CDyadic{-1}) return "-";
  if (c == CDyadic::i()) return "i*";
  if (c == -CDyadic::i()) return "-i*";
  if (c.is_real()) return c.re().str() + "*";
  if (c.re().is_zero()) return c.im().str() + "*i*";
  return "(" + c.str() + ")*";
}

}  // namespace

LinearForm LinearForm::symbol(int index) {
  LinearForm f;
  f.set_coeff(index, CDyadic{1});
  return f;
}

bool LinearForm::is_zero() const {
  if (!constant_.is_zero()) return false;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool LinearForm::is_real() const {
  if (!constant_.is_real()) return false;
  for (const auto& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

LinearForm LinearForm::conj() const {
  LinearForm r;
  r.constant_ = constant_.conj();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k].conj();
  return r;
}

CDyadic LinearForm::evaluate(const std::array<CDyadic, 8>& f) const {
  CDyadic r = constant_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) r += coeffs_[k] * f[k];
  return r;
}

std::complex<double> LinearForm::evaluate(const std::array<double, 8>& f) const {
  std::complex<double> r = constant_.approx();
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) r += coeffs_[k].approx() * f[k];
  return r;
}

LinearForm LinearForm::operator-() const {
  LinearForm r;
  r.constant_ = -constant_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  constant_ -= o.constant_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

LinearForm& LinearForm::operator*=(const CDyadic& s) {
  constant_ *= s;
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string LinearForm::str() const {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  };
  for (int a = 1; a <= kSymbols; ++a) {
    const CDyadic& c = coeff(a);
    if (c.is_zero()) continue;
    append(coefficient_prefix(c) + "f" + std::to_string(a));
  }
  if (!constant_.is_zero()) {
    const std::string k = constant_.str();
    // A complex constant after other terms needs parentheses to stay one term.
    append(!out.empty() && !constant_.is_real() && !constant_.re().is_zero() ? "(" + k + ")" : k);
  }
  return out.empty() ? "0" : out;
}

LinearForm parse_linear_form(std::string_view text, int line, int column) {
  Affine a = parse_affine(text, f_symbols(), line, column);
  LinearForm f{a.constant};
  for (const auto& [name, c] : a.coeffs) f.set_coeff(std::stoi(name.substr(1)), c);
  return f;
}

bool hermitian_symbolic(const SymMatrix8& m) { return m == m.adjoint(); }

ComplexMatrix8 substitute(const SymMatrix8& m, const std::array<double, 8>& f) {
  ComplexMatrix8 r;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) r(i, j) = m(i, j).evaluate(f);
  return r;
}

Matrix8 substitute(const SymMatrix8& m, const std::array<CDyadic, 8>& f) {
  Matrix8 r;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) r(i, j) = m(i, j).evaluate(f);
  return r;
}

}  // namespace octo
