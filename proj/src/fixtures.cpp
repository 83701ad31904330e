#include "octo/fixtures.hpp"

#include "octo/parse.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

namespace octo {

FixtureError::FixtureError(std::string file, int line, int column, const std::string& msg)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      file_(std::move(file)),
      line_(line),
      column_(column) {}

const std::vector<std::string>& canonical_fixture_names() {
  static const std::vector<std::string> names = {
      "table2.txt",    "table1.txt",     "eq2_sigma.txt", "eq6_X.txt",     "eq12_R12.txt", "eq13_delta.txt",
      "eq14_map.txt",  "eq21_Y1.txt",    "eq21_Y2.txt",   "eq23_C.txt",    "eq24_D.txt",
  };
  return names;
}

namespace {

template <std::size_t N, typename Cell>
SquareMatrix<Cell, N> parse_grid(std::string_view text, auto&& parse_cell) {
  const auto rows = tokenize_fixture(text);
  if (rows.size() != N) {
    throw ParseError("expected " + std::to_string(N) + " rows, found " + std::to_string(rows.size()),
                     rows.empty() ? 0 : rows.back().front().line, 1);
  }
  SquareMatrix<Cell, N> m;
  for (std::size_t r = 0; r < N; ++r) {
    if (rows[r].size() != N) {
      throw ParseError("expected " + std::to_string(N) + " cells, found " + std::to_string(rows[r].size()),
                       rows[r].front().line, 1);
    }
    for (std::size_t c = 0; c < N; ++c) m(r, c) = parse_cell(rows[r][c]);
  }
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError(path.string(), 0, 0, "cannot open fixture file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SymMatrix8 parse_sym_matrix8(std::string_view text) {
  return parse_grid<8, LinearForm>(text, [](const Token& t) { return parse_linear_form(t.text, t.line, t.column); });
}

SymMatrix4 parse_sym_matrix4(std::string_view text) {
  return parse_grid<4, LinearForm>(text, [](const Token& t) { return parse_linear_form(t.text, t.line, t.column); });
}

std::pair<Matrix8, Matrix8> parse_theta_matrix(std::string_view text) {
  static const std::vector<std::string> symbols = {"t"};
  const auto grid = parse_grid<8, Affine>(text, [](const Token& t) { return parse_affine(t.text, symbols, t.line, t.column); });
  Matrix8 constant;
  Matrix8 theta;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Affine& a = grid(i, j);
      constant(i, j) = a.constant;
      if (auto it = a.coeffs.find("t"); it != a.coeffs.end()) theta(i, j) = it->second;
    }
  return {constant, theta};
}

std::array<LinearForm, 8> parse_component_map(std::string_view text) {
  std::array<LinearForm, 8> out;
  std::array<bool, 8> seen{};
  const auto rows = tokenize_fixture(text);
  for (const auto& row : rows) {
    const Token& name = row.front();
    if (name.text.size() != 2 || name.text[0] != 'f' || name.text[1] < '1' || name.text[1] > '8') {
      throw ParseError("expected f<1-8>, got '" + name.text + "'", name.line, name.column);
    }
    const auto A = static_cast<std::size_t>(name.text[1] - '1');
    if (seen[A]) throw ParseError("duplicate line for " + name.text, name.line, name.column);
    if (row.size() != 2) throw ParseError("expected one increment token after " + name.text, name.line, name.column);
    seen[A] = true;
    out[A] = parse_linear_form(row[1].text, row[1].line, row[1].column);
  }
  for (std::size_t A = 0; A < 8; ++A)
    if (!seen[A]) throw ParseError("missing line for f" + std::to_string(A + 1), 0, 1);
  return out;
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  return os.str();
}

FixtureStore load_fixtures(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw FixtureError(dir.string(), 0, 0, "fixture directory does not exist");
  }
  FixtureStore store;
  for (const std::string& name : canonical_fixture_names()) {
    const std::filesystem::path path = dir / name;
    if (!std::filesystem::exists(path)) throw FixtureError(path.string(), 0, 0, "missing fixture file");
    const std::string text = read_file(path);
    store.digests.push_back({name, "sha256:" + sha256_hex(text)});
    try {
      if (name == "table2.txt") {
        store.table2 = parse_structure_table(text, 'e');
      } else if (name == "table1.txt") {
        store.table1 = to_signed_table(parse_structure_table(text, 'E'), 'E');
      } else if (name == "eq2_sigma.txt") {
        store.betas = parse_beta_definitions(text);
      } else if (name == "eq6_X.txt") {
        store.x = parse_sym_matrix8(text);
      } else if (name == "eq12_R12.txt") {
        std::tie(store.r12_constant, store.r12_theta) = parse_theta_matrix(text);
      } else if (name == "eq13_delta.txt") {
        store.delta_bracket = parse_sym_matrix8(text);
      } else if (name == "eq14_map.txt") {
        store.component_increments = parse_component_map(text);
      } else if (name == "eq21_Y1.txt") {
        store.y.first = parse_sym_matrix8(text);
      } else if (name == "eq21_Y2.txt") {
        store.y.second = parse_sym_matrix8(text);
      } else if (name == "eq23_C.txt") {
        store.y.C = parse_sym_matrix4(text);
      } else if (name == "eq24_D.txt") {
        store.y.D = parse_sym_matrix4(text);
      }
    } catch (const ParseError& e) {
      throw FixtureError(path.string(), e.line(), e.column(), e.what());
    }
  }
  return store;
}

}  // namespace octo
