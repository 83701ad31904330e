#pragma once

#include "octo/linear_form.hpp"
#include "octo/matrep.hpp"
#include "octo/octonion.hpp"
#include "octo/splitrep.hpp"

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

/// I/O or parse failure in a fixture file; what() carries `file:line:col: msg`.
class FixtureError : public std::runtime_error {
public:
  FixtureError(std::string file, int line, int column, const std::string& msg);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  std::string file_;
  int line_;
  int column_;
};

struct FixtureDigest {
  std::string name;
  std::string digest;  // "sha256:<hex>"

  friend bool operator==(const FixtureDigest&, const FixtureDigest&) = default;
};

/// Every transcribed table and matrix, parsed.
struct FixtureStore {
  StructureTable table2;
  SignedTable table1;
  BetaDefinitions betas;
  SymMatrix8 x;                           // X written out entrywise
  Matrix8 r12_constant;                   // R12 = constant + θ * theta_part
  Matrix8 r12_theta;
  SymMatrix8 delta_bracket;               // M in X' = X + 2θ M
  std::array<LinearForm, 8> component_increments;  // f_A -> f_A + θ * L_A
  YFixture y;
  std::vector<FixtureDigest> digests;     // canonical order
};

/// table2.txt, table1.txt, eq2_sigma.txt, eq6_X.txt, eq12_R12.txt,
/// eq13_delta.txt, eq14_map.txt, eq21_Y1.txt, eq21_Y2.txt, eq23_C.txt, eq24_D.txt.
const std::vector<std::string>& canonical_fixture_names();

FixtureStore load_fixtures(const std::filesystem::path& dir);

// Individual grammars, exposed for tests.
SymMatrix8 parse_sym_matrix8(std::string_view text);
SymMatrix4 parse_sym_matrix4(std::string_view text);
/// Matrix of affine tokens in the symbol `t`; returns (constant, t-part).
std::pair<Matrix8, Matrix8> parse_theta_matrix(std::string_view text);
/// Eight lines `f<A> <increment>`.
std::array<LinearForm, 8> parse_component_map(std::string_view text);

std::string sha256_hex(std::string_view data);

}  // namespace octo
