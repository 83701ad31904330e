#include "octo/fixtures.hpp"
#include "octo/parse.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace octo;
namespace fs = std::filesystem;

namespace {

// Copy of the bundled fixtures in a scratch directory, for corruption tests.
fs::path scratch_copy(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("octo-so8-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& name : canonical_fixture_names()) fs::copy_file(fs::path(OCTO_SO8_TEST_FIXTURES) / name, dir / name);
  return dir;
}

void overwrite(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("bundled fixtures load") {
  const FixtureStore fx = load_fixtures(OCTO_SO8_TEST_FIXTURES);
  REQUIRE(fx.digests.size() == 11);
  for (std::size_t k = 0; k < 11; ++k) {
    CHECK(fx.digests[k].name == canonical_fixture_names()[k]);
    CHECK(fx.digests[k].digest.rfind("sha256:", 0) == 0);
    CHECK(fx.digests[k].digest.size() == 7 + 64);
  }
  CHECK(fx.x(0, 3) == parse_linear_form("-f4-i*f2"));
  CHECK(fx.component_increments[0] == parse_linear_form("2*f2-2*i*f4"));
  CHECK(fx.component_increments[1] == parse_linear_form("-2*f1"));
  CHECK(fx.r12_constant.is_identity());
  CHECK(fx.r12_theta(0, 4) == CDyadic(-1));
  CHECK(fx.y.second(3, 7) == -LinearForm::symbol(8));
}

TEST_CASE("sha256 test vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("missing directory and missing file") {
  CHECK_THROWS_AS(load_fixtures("/nonexistent/octo-so8"), FixtureError);
  const fs::path dir = scratch_copy("missing");
  fs::remove(dir / "eq24_D.txt");
  try {
    load_fixtures(dir);
    FAIL("expected FixtureError");
  } catch (const FixtureError& e) {
    CHECK(e.file().find("eq24_D.txt") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("malformed token is located by file, line and column") {
  const fs::path dir = scratch_copy("bad-token");
  overwrite(dir / "eq23_C.txt", "# C\nf1 0 0 0\n0 f1 0 0\n0 0 f1*f2 0\n0 0 0 f1\n");
  try {
    load_fixtures(dir);
    FAIL("expected FixtureError");
  } catch (const FixtureError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 5);
    CHECK(std::string(e.what()).find("eq23_C.txt:4:") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("grid and map grammars reject wrong shapes") {
  CHECK_THROWS_AS(parse_sym_matrix4("1 0 0 0\n0 1 0 0\n0 0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_sym_matrix4("1 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_component_map("f1 0\nf1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_component_map("f1 0\nf2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_component_map("g1 0\n"), ParseError);
  const auto [c, t] = parse_theta_matrix("1 -t 0 0 0 0 0 0\nt 1 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 1 0 0 0 0\n"
                                         "0 0 0 0 1 0 0 0\n0 0 0 0 0 1 0 0\n0 0 0 0 0 0 1 0\n0 0 0 0 0 0 0 1\n");
  CHECK(c.is_identity());
  CHECK(t(0, 1) == CDyadic(-1));
  CHECK(t(1, 0) == CDyadic(1));
}
