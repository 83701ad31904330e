#include "octo/cli.hpp"

#include "octo/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef OCTO_SO8_DEFAULT_FIXTURES
#define OCTO_SO8_DEFAULT_FIXTURES "fixtures"
#endif

namespace octo {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string fixtures;
  std::string format = "md";
  bool strict = false;
  double tol = ExpOptions{}.tol;
  std::string beta_variant = "sigma";
  std::string theta;
  std::string f;
  bool split = false;
  std::string y_source = "fixture";
  int k = 0;
  int l = 0;
  int beta = 0;

  bool json() const { return format == "json"; }
};

std::filesystem::path fixture_dir(const Config& cfg) {
  if (!cfg.fixtures.empty()) return cfg.fixtures;
  if (const char* env = std::getenv("OCTO_SO8_FIXTURES"); env != nullptr && *env != '\0') return env;
  return OCTO_SO8_DEFAULT_FIXTURES;
}

BetaVariant variant(const Config& cfg) {
  return cfg.beta_variant == "tensor" ? BetaVariant::TensorText : BetaVariant::SigmaExpansion;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.size() != 8) throw UsageError("--f expects 8 comma-separated values, got " + std::to_string(out.size()));
  return out;
}

std::array<Dyadic, 8> parse_exact_f(const std::string& text) {
  const auto items = split_list(text);
  std::array<Dyadic, 8> f;
  for (std::size_t k = 0; k < 8; ++k) f[k] = parse_dyadic(items[k]);
  return f;
}

std::array<double, 8> parse_numeric_f(const std::string& text) {
  const auto items = split_list(text);
  std::array<double, 8> f{};
  for (std::size_t k = 0; k < 8; ++k) {
    try {
      f[k] = parse_dyadic(items[k]).to_double();
    } catch (const std::exception&) {
      std::size_t used = 0;
      try {
        f[k] = std::stod(items[k], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != items[k].size() || !std::isfinite(f[k])) throw UsageError("bad number '" + items[k] + "' in --f");
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Rendering

template <typename Cell>
void md_grid(std::ostream& out, char unit, Cell&& cell) {
  out << "| · |";
  for (int b = 0; b < 8; ++b) out << ' ' << unit << b << " |";
  out << "\n|---|";
  for (int b = 0; b < 8; ++b) out << "---|";
  out << '\n';
  for (int a = 0; a < 8; ++a) {
    out << "| " << unit << a << " |";
    for (int b = 0; b < 8; ++b) out << ' ' << cell(a, b) << " |";
    out << '\n';
  }
}

void md_matrix(std::ostream& out, const Matrix8& m) {
  out << "```\n" << dump_matrix(m) << "```\n";
}

mpq_class rational(const Dyadic& d) {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, d.exponent());
  mpq_class q(d.numerator(), denom);
  q.canonicalize();
  return q;
}

/// num / den as an exact complex rational, `p/q` or `p/q+r/s*i`.
std::string rational_quotient(const CDyadic& num, const CDyadic& den) {
  const mpq_class a = rational(num.re());
  const mpq_class b = rational(num.im());
  const mpq_class c = rational(den.re());
  const mpq_class d = rational(den.im());
  const mpq_class n2 = c * c + d * d;
  const mpq_class re = (a * c + b * d) / n2;
  const mpq_class im = (b * c - a * d) / n2;
  if (im == 0) return re.get_str();
  std::string s = re == 0 ? "" : re.get_str();
  if (im > 0 && !s.empty()) s += "+";
  return s + im.get_str() + "*i";
}

double magnitude(const ApproxBioctonion& x) {
  double s = 0;
  for (int k = 0; k < 8; ++k) s += std::norm(x[k]);
  return std::sqrt(s);
}

json approx_json(const ApproxBioctonion& x) {
  json re = json::array();
  json im = json::array();
  for (int k = 0; k < 8; ++k) {
    re.push_back(x[k].real());
    im.push_back(x[k].imag());
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}, {"magnitude", magnitude(x)}};
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_tables(const Config& cfg, std::ostream& out) {
  const FixtureStore fx = load_fixtures(fixture_dir(cfg));
  const SignedTable oct = to_signed_table(fx.table2, 'e');
  const SignedTable derived = signed_table(build_E(build_beta_set(variant(cfg), fx.betas)).e);
  const TableDiff diff = compare_tables(oct, derived);
  const TableDiff diff1 = compare_tables(derived, fx.table1);
  if (cfg.json()) {
    out << json{{"table2", table_json(oct)},
                {"derived_e", table_json(derived)},
                {"table1", table_json(fx.table1)},
                {"diff", table_diff_json(diff, 'e', 'E')},
                {"diff_table1", table_diff_json(diff1, 'E', 'E')}}
               .dump(2)
        << '\n';
    return 0;
  }
  std::array<bool, 64> marked{};
  for (const auto& c : diff.cells) marked[static_cast<std::size_t>(c.row * 8 + c.col)] = true;

  out << "## Octonion table (fixture)\n\n";
  md_grid(out, 'e', [&](int a, int b) { return cell_token(oct(a, b), 'e'); });
  out << "\n## Derived E table (" << to_string(variant(cfg)) << ")\n\n";
  md_grid(out, 'E', [&](int a, int b) {
    const std::string t = cell_token(derived(a, b), 'E');
    return marked[static_cast<std::size_t>(a * 8 + b)] ? "**" + t + "**" : t;
  });
  out << "\nBold cells differ from the octonion table.\n\n";
  out << "identical: " << diff.identical << ", sign-flipped: " << diff.sign_flipped
      << ", different: " << diff.different << '\n';
  out << "\n## E table (fixture)\n\n";
  md_grid(out, 'E', [&](int a, int b) { return cell_token(fx.table1(a, b), 'E'); });
  out << "\nDerived vs fixture E table: identical: " << diff1.identical << ", sign-flipped: " << diff1.sign_flipped
      << ", different: " << diff1.different << '\n';
  for (const auto& c : diff1.cells) {
    out << "- E" << c.row << "·E" << c.col << ": derived " << cell_token(c.left, 'E') << ", fixture "
        << cell_token(c.right, 'E') << '\n';
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const ClaimReport report = run_all(load_fixtures(fixture_dir(cfg)));
  if (cfg.json()) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_markdown(report);
  }
  const Summary s = report.summary();
  return cfg.strict && s.refuted > 0 ? 1 : 0;
}

int cmd_rotate_symbolic(const Config& cfg, const FixtureStore& fx, const BetaSet& set, std::ostream& out) {
  const ComponentMap map = component_map(cfg.k, cfg.l, set);
  // The transcribed map belongs to the plane whose generator is β1β2.
  const bool compare = set[cfg.k] * set[cfg.l] == set[1] * set[2];
  std::vector<ComponentLineDiff> diffs;
  if (compare) diffs = diff_component_maps(map, fx.component_increments);
  if (cfg.json()) {
    json j = component_map_json(map);
    j["plane"] = json::array({cfg.k, cfg.l});
    j["variant"] = to_string(set.variant);
    j["compared_with_fixture"] = compare;
    json flagged = json::array();
    for (const auto& d : diffs) {
      if (!d.match) {
        flagged.push_back({{"component", d.index}, {"derived", render_component_line(d.index, d.derived)},
                           {"fixture", render_component_line(d.index, d.stated)},
                           {"derived_imaginary", d.derived_imaginary}, {"fixture_imaginary", d.stated_imaginary}});
      }
    }
    j["discrepancies"] = std::move(flagged);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Rotation in plane (" << cfg.k << "," << cfg.l << "), first order in θ:\n\n";
  for (int A = 1; A <= 8; ++A) {
    out << render_component_line(A, map.increments[static_cast<std::size_t>(A - 1)]);
    if (compare) {
      const auto& d = diffs[static_cast<std::size_t>(A - 1)];
      if (!d.match) {
        out << "    [differs from fixture: " << render_component_line(A, d.stated);
        if (d.stated_imaginary) out << ", fixture coefficient is imaginary";
        out << "]";
      }
    }
    out << '\n';
  }
  out << '\n' << (map.closes() ? "residual: 0" : "residual: nonzero (the rotated X leaves span{β})") << '\n';
  if (!map.closes()) {
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (!map.residual(i, j).is_zero()) {
          out << "  (" << i + 1 << "," << j + 1 << "): " << map.residual(i, j).str() << '\n';
        }
  }
  return 0;
}

int cmd_rotate_numeric(const Config& cfg, const BetaSet& set, std::ostream& out) {
  if (cfg.theta.empty() || cfg.f.empty()) throw UsageError("numeric rotate needs both --theta and --f");
  const Dyadic theta = parse_dyadic(cfg.theta);
  const std::array<Dyadic, 8> fd = parse_exact_f(cfg.f);
  std::array<CDyadic, 8> f;
  for (std::size_t k = 0; k < 8; ++k) f[k] = fd[k];

  const SymMatrix8 X = assemble_X(set);
  const Matrix8 first = substitute(rotate_first_order(X, cfg.k, cfg.l, theta, set).result, f);
  const ScaledSymMatrix exact = rotate_exact(X, cfg.k, cfg.l, theta, set);
  const Matrix8 num = substitute(exact.numerator, f);

  const Projection p1 = extract_components(lift(first), set);
  const Projection p2 = extract_components(lift(num), set);
  const double den = std::abs(exact.denominator.approx());
  double r1 = 0;
  double r2 = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      r1 = std::max(r1, std::abs(p1.residual(i, j).constant().approx()));
      r2 = std::max(r2, std::abs(p2.residual(i, j).constant().approx()) / den);
    }

  std::vector<std::string> fo;
  std::vector<std::string> ex;
  for (std::size_t A = 0; A < 8; ++A) {
    fo.push_back(p1.components[A].constant().str());
    ex.push_back(rational_quotient(p2.components[A].constant(), exact.denominator));
  }
  if (cfg.json()) {
    out << json{{"plane", json::array({cfg.k, cfg.l})},
                {"theta", theta.str()},
                {"f", [&] {
                   json a = json::array();
                   for (const auto& v : fd) a.push_back(v.str());
                   return a;
                 }()},
                {"first_order", fo},
                {"first_order_residual", r1},
                {"conjugation", ex},
                {"conjugation_residual", r2}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "plane (" << cfg.k << "," << cfg.l << "), θ = " << theta.str() << "\n\n";
  out << "| A | f | first order f' | conjugation f' |\n|---|---|---|---|\n";
  for (std::size_t A = 0; A < 8; ++A) {
    out << "| " << A + 1 << " | " << fd[A].str() << " | " << fo[A] << " | " << ex[A] << " |\n";
  }
  out << "\nresidual outside span{β}: first order " << r1 << ", conjugation " << r2 << '\n';
  return 0;
}

int cmd_rotate(const Config& cfg, std::ostream& out) {
  if (cfg.k == cfg.l) throw UsageError("rotation plane needs k != l");
  const FixtureStore fx = load_fixtures(fixture_dir(cfg));
  const BetaSet set = build_beta_set(variant(cfg), fx.betas);
  if (cfg.theta.empty() && cfg.f.empty()) return cmd_rotate_symbolic(cfg, fx, set, out);
  return cmd_rotate_numeric(cfg, set, out);
}

int cmd_spinor(const Config& cfg, std::ostream& out) {
  if (cfg.f.empty()) throw UsageError("spinor needs --f");
  const FixtureStore fx = load_fixtures(fixture_dir(cfg));
  const std::array<double, 8> f = parse_numeric_f(cfg.f);
  const BetaSet set = build_beta_set(variant(cfg), fx.betas);
  const SymMatrix8 X = assemble_X(set);
  ExpOptions opts;
  opts.tol = cfg.tol;

  const YSource source = cfg.y_source == "reconstructed" ? YSource::Reconstructed : YSource::Fixture;
  SymMatrix8 generator = X;
  Spinor psi = octonion_spinor();
  if (cfg.split) {
    generator = y_matrix(source, fx.y, block_decompose(X));
    psi = build_split_spinor();
  }
  const ComplexMatrix8 G = substitute(generator, f);
  const ComplexMatrix8 U = expm(G, opts);
  const ApproxSpinor result = octo::apply(U, psi);

  if (cfg.json()) {
    json comps = json::array();
    for (const auto& c : result) comps.push_back(approx_json(c));
    json j = {{"spinor", cfg.split ? "phi" : "psi"},
              {"f", f},
              {"tolerance", opts.tol},
              {"components", std::move(comps)},
              {"unitarity_defect", unitarity_defect(U)},
              {"hermiticity_defect", hermiticity_defect(U)}};
    if (cfg.split) j["y_source"] = to_string(source);
    out << j.dump(2) << '\n';
    return 0;
  }
  const char* name = cfg.split ? "φ'" : "ψ'";
  if (cfg.split) out << "Y source: " << to_string(source) << '\n';
  for (std::size_t k = 0; k < 8; ++k) {
    out << name << '[' << k + 1 << "] = " << to_string(result[k]) << "    |" << magnitude(result[k]) << "|\n";
  }
  out << "\nunitarity defect: " << unitarity_defect(U) << ", hermiticity defect: " << hermiticity_defect(U) << '\n';
  return 0;
}

int cmd_gram(const Config& cfg, std::ostream& out) {
  const FixtureStore fx = load_fixtures(fixture_dir(cfg));
  const Matrix8 g = gram(build_beta_set(variant(cfg), fx.betas));
  const bool singular = determinant(g).is_zero();
  if (cfg.json()) {
    out << json{{"variant", cfg.beta_variant}, {"gram", matrix_json(g)}, {"singular", singular}}.dump(2) << '\n';
    return 0;
  }
  out << "Gram matrix Tr(β_A β_B), " << to_string(variant(cfg)) << (singular ? " (singular)" : "") << "\n\n";
  md_matrix(out, g);
  return 0;
}

int cmd_dump_beta(const Config& cfg, std::ostream& out) {
  if (cfg.beta < 1 || cfg.beta > 8) throw UsageError("β index must be in 1..8");
  const FixtureStore fx = load_fixtures(fixture_dir(cfg));
  const Matrix8 b = build_beta_set(variant(cfg), fx.betas)[cfg.beta];
  if (cfg.json()) {
    out << json{{"beta", cfg.beta}, {"variant", cfg.beta_variant}, {"matrix", matrix_json(b)}}.dump(2) << '\n';
    return 0;
  }
  out << "β" << cfg.beta << " (" << to_string(variant(cfg)) << ")\n\n";
  md_matrix(out, b);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact SO(8) / octonion toolkit", "octo-so8"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolkitVersion);
  app.add_option("--fixtures", cfg.fixtures, "Fixture directory (default: $OCTO_SO8_FIXTURES or bundled)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"md", "markdown", "json"}))
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Taylor truncation tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--beta-variant", cfg.beta_variant, "β construction")
      ->check(CLI::IsMember({"sigma", "tensor"}))
      ->capture_default_str();

  auto* tables = app.add_subcommand("tables", "Octonion table, derived E table and their diff");
  auto* verify = app.add_subcommand("verify", "Run every claim and print the report");
  verify->add_flag("--strict", cfg.strict, "Exit 1 when any claim is refuted");
  auto* rotate = app.add_subcommand("rotate", "First-order rotation in the (k,l) plane");
  rotate->add_option("k", cfg.k)->required()->check(CLI::Range(1, 8));
  rotate->add_option("l", cfg.l)->required()->check(CLI::Range(1, 8));
  rotate->add_option("--theta", cfg.theta, "Dyadic angle, e.g. 1/64");
  rotate->add_option("--f", cfg.f, "Eight comma-separated dyadic components");
  auto* spinor = app.add_subcommand("spinor", "Apply e^X to ψ, or e^Y to φ with --split");
  spinor->add_option("--f", cfg.f, "Eight comma-separated components")->required();
  spinor->add_flag("--split", cfg.split, "Use the split basis and Y");
  spinor->add_option("--y-source", cfg.y_source, "Y as transcribed or rebuilt from blocks")
      ->check(CLI::IsMember({"fixture", "reconstructed"}))
      ->capture_default_str();
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the β set");
  auto* dump = app.add_subcommand("dump-beta", "Print one β matrix");
  dump->add_option("A", cfg.beta, "β index, 1..8")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (cfg.format == "markdown") cfg.format = "md";

  try {
    if (*tables) return cmd_tables(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*rotate) return cmd_rotate(cfg, out);
    if (*spinor) return cmd_spinor(cfg, out);
    if (*gram_cmd) return cmd_gram(cfg, out);
    if (*dump) return cmd_dump_beta(cfg, out);
  } catch (const std::exception& e) {
    err << "octo-so8: error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace octo
