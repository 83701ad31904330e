#include "octo/verify.hpp"

#include "octo/expm.hpp"
#include "octo/so8rot.hpp"
#include "octo/splitrep.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace octo {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Confirmed:
      return "confirmed";
    case Status::Refuted:
      return "refuted";
    case Status::Degenerate:
      break;
  }
  return "degenerate";
}

Status status_from_string(const std::string& s) {
  if (s == "confirmed") return Status::Confirmed;
  if (s == "refuted") return Status::Refuted;
  if (s == "degenerate") return Status::Degenerate;
  throw std::invalid_argument("unknown claim status '" + s + "'");
}

// ---------------------------------------------------------------------------
// JSON helpers

json matrix_json(const Matrix8& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 8; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 8; ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

template <std::size_t N>
json sym_json(const SquareMatrix<LinearForm, N>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < N; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < N; ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Cells where `derived` and `fixture` differ, 1-based.
template <typename E, std::size_t N>
json cell_diff(const SquareMatrix<E, N>& derived, const SquareMatrix<E, N>& fixture) {
  json cells = json::array();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (derived(i, j) != fixture(i, j)) {
        cells.push_back({{"row", i + 1}, {"col", j + 1}, {"derived", derived(i, j).str()},
                         {"fixture", fixture(i, j).str()}});
      }
  return cells;
}

json block_cells_json(const std::vector<BlockCellDiff>& cells) {
  json out = json::array();
  for (const auto& c : cells) {
    out.push_back({{"block", c.block}, {"row", c.row + 1}, {"col", c.col + 1}, {"expected", c.expected.str()},
                   {"actual", c.actual.str()}});
  }
  return out;
}

json pair_json(const std::pair<int, int>& p) { return json::array({p.first, p.second}); }

}  // namespace

json table_json(const SignedTable& t) {
  json rows = json::array();
  for (int a = 0; a < 8; ++a) {
    json row = json::array();
    for (int b = 0; b < 8; ++b) row.push_back(cell_token(t(a, b), t.unit));
    rows.push_back(std::move(row));
  }
  return rows;
}

json table_diff_json(const TableDiff& d, char left_unit, char right_unit) {
  json cells = json::array();
  for (const auto& c : d.cells) {
    const std::string product = std::string(1, left_unit) + std::to_string(c.row) + "·" + right_unit + std::to_string(c.col);
    cells.push_back({{"row", c.row + 1}, {"col", c.col + 1}, {"product", product}, {"relation", to_string(c.relation)},
                     {"left", cell_token(c.left, left_unit)}, {"right", cell_token(c.right, right_unit)}});
  }
  return {{"identical", d.identical}, {"sign_flipped", d.sign_flipped}, {"different", d.different},
          {"cells", std::move(cells)}};
}

json component_map_json(const ComponentMap& m) {
  json lines = json::array();
  for (int A = 1; A <= 8; ++A) lines.push_back(render_component_line(A, m.increments[static_cast<std::size_t>(A - 1)]));
  json residual = json::array();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (!m.residual(i, j).is_zero()) {
        residual.push_back({{"row", i + 1}, {"col", j + 1}, {"value", m.residual(i, j).str()}});
      }
  return {{"lines", std::move(lines)}, {"closes", m.closes()}, {"residual", std::move(residual)}};
}

// ---------------------------------------------------------------------------
// Claims

namespace {

struct Outcome {
  Status status;
  json details;
};

Status verdict(bool ok) { return ok ? Status::Confirmed : Status::Refuted; }

std::string tensor_label(const BetaDefinition& d) {
  return "σ" + std::to_string(d.pauli) + "⊗γ" + std::to_string(d.gamma);
}

Outcome claim_beta_forms(const FixtureStore& fx) {
  json per = json::array();
  bool all = true;
  for (int A = 1; A <= 7; ++A) {
    const Matrix8 t = beta_tensor_text(A, fx.betas);
    const Matrix8 s = beta_sigma_expansion(A, fx.betas);
    all = all && t == s;
    per.push_back({{"beta", A}, {"tensor", tensor_label(fx.betas[static_cast<std::size_t>(A - 1)])},
                   {"equal", t == s}, {"cells", cell_diff(t, s)}});
  }
  return {verdict(all), {{"betas", std::move(per)}}};
}

Outcome claim_beta8(const FixtureStore& fx) {
  const Matrix8 t = beta_tensor_text(8, fx.betas);
  const Matrix8 s = beta_sigma_expansion(8, fx.betas);
  json d = {{"tensor", tensor_label(fx.betas[7])},
            {"cells", cell_diff(t, s)},
            {"tensor_equals_beta1_tensor", t == beta_tensor_text(1, fx.betas)},
            {"expansion_equals_s3_g4", s == kron(pauli(3), gamma(4))},
            {"canonical_choice", to_string(BetaVariant::SigmaExpansion)}};
  return {verdict(t == s), std::move(d)};
}

Outcome claim_beta_hermitian(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  json per = json::array();
  bool all = true;
  for (int A = 1; A <= 8; ++A) {
    const Matrix8& b = set[A];
    const bool herm = b.is_hermitian();
    all = all && herm;
    per.push_back({{"beta", A}, {"hermitian", herm}, {"squares_to_identity", (b * b).is_identity()},
                   {"trace", b.trace().str()}});
  }
  // Every pair either commutes or anticommutes; record which.
  const auto anti = anticommutators(set);
  json grid = json::array();
  for (int a = 1; a <= 8; ++a) {
    json row = json::array();
    for (int b = 1; b <= 8; ++b) {
      const Matrix8& ac = anti[static_cast<std::size_t>((a - 1) * 8 + (b - 1))];
      std::string tag = "other";
      if (ac.is_zero()) {
        tag = "anti";
      } else if (ac == scale(CDyadic{2}, set[a] * set[b])) {
        tag = "comm";
      }
      row.push_back(tag);
    }
    grid.push_back(std::move(row));
  }
  return {verdict(all), {{"betas", std::move(per)}, {"anticommutation", std::move(grid)}}};
}

Outcome claim_gram(const FixtureStore& fx) {
  const Matrix8 gs = gram(build_beta_set(BetaVariant::SigmaExpansion, fx.betas));
  const Matrix8 gt = gram(build_beta_set(BetaVariant::TensorText, fx.betas));
  const bool ortho = gs == scale(CDyadic{8}, Matrix8::identity());
  json d = {{"sigma_expansion", matrix_json(gs)},
            {"tensor_text", matrix_json(gt)},
            {"tensor_text_entry_1_8", gt(0, 7).str()},
            {"tensor_text_singular", determinant(gt).is_zero()}};
  return {verdict(ortho), std::move(d)};
}

Outcome claim_spinor_norm(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  std::array<double, 8> f{};
  for (std::size_t A = 0; A < 8; ++A) f[A] = static_cast<double>(A + 1) / 16.0;
  const ExpOptions opts;
  const ComplexMatrix8 U = expm(substitute(assemble_X(set), f), opts);
  const double defect = unitarity_defect(U);
  json d = {{"f", f},
            {"tolerance", opts.tol},
            {"unitarity_defect", defect},
            {"hermiticity_defect", hermiticity_defect(U)},
            {"note", "exponent is Hermitian, so exp(X) is positive definite rather than unitary"}};
  return {verdict(defect < 10 * opts.tol), std::move(d)};
}

Outcome claim_eq6(const FixtureStore& fx) {
  const SymMatrix8 X = assemble_X(build_beta_set(BetaVariant::SigmaExpansion, fx.betas));
  return {verdict(X == fx.x), {{"cells", cell_diff(X, fx.x)}}};
}

Outcome claim_x_traceless(const FixtureStore& fx) {
  const SymMatrix8 X = assemble_X(build_beta_set(BetaVariant::SigmaExpansion, fx.betas));
  const LinearForm tr = X.trace();
  const bool herm = hermitian_symbolic(X);
  json d = {{"trace", tr.str()},
            {"hermitian", herm},
            {"fixture_trace", fx.x.trace().str()},
            {"fixture_hermitian", hermitian_symbolic(fx.x)}};
  return {verdict(tr.is_zero() && herm), std::move(d)};
}

Outcome claim_block_form(const FixtureStore& fx) {
  const SymMatrix8 X = assemble_X(build_beta_set(BetaVariant::SigmaExpansion, fx.betas));
  try {
    const BlockDecomp d = block_decompose(X);
    const bool fixture_ok = [&] {
      try {
        const BlockDecomp f = block_decompose(fx.x);
        return f.A == d.A && f.B == d.B;
      } catch (const StructureMismatch&) {
        return false;
      }
    }();
    return {verdict(fixture_ok), {{"A", sym_json(d.A)}, {"B", sym_json(d.B)}, {"fixture_blocks_match", fixture_ok}}};
  } catch (const StructureMismatch& e) {
    json cells = json::array();
    for (const auto& c : e.cells()) {
      cells.push_back({{"row", c.row + 1}, {"col", c.col + 1}, {"expected", c.expected.str()},
                       {"actual", c.actual.str()}});
    }
    return {Status::Refuted, {{"cells", std::move(cells)}}};
  }
}

Outcome claim_eq12(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  const Matrix8 n = set[1] * set[2];
  const bool c_ok = fx.r12_constant.is_identity();
  const bool t_ok = fx.r12_theta == n;
  // One dyadic spot value on top of the symbolic comparison.
  const Dyadic theta = Dyadic::pow2(6);
  const bool spot = rotation_operator(1, 2, theta, set) == fx.r12_constant + scale(CDyadic{theta}, fx.r12_theta);
  json d = {{"constant_part", cell_diff(Matrix8::identity(), fx.r12_constant)},
            {"theta_part", cell_diff(n, fx.r12_theta)},
            {"spot_check_theta", theta.str()},
            {"spot_check", spot}};
  return {verdict(c_ok && t_ok && spot), std::move(d)};
}

Outcome claim_eq13(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  const SymMatrix8 X = assemble_X(set);
  // Δ/θ = [β1β2, X] against 2M.
  const SymMatrix8 derived = rotate_first_order(X, 1, 2, Dyadic{1}, set).delta;
  const SymMatrix8 stated = scale(CDyadic{2}, fx.delta_bracket);
  return {verdict(derived == stated), {{"comparison", "delta/theta vs 2*M"}, {"cells", cell_diff(derived, stated)}}};
}

Outcome claim_first_order_scaling(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  const SymMatrix8 X = assemble_X(set);
  std::array<double, 8> ones;
  ones.fill(1.0);
  const double e6 = first_order_defect(X, 1, 2, Dyadic::pow2(6), ones, set);
  const double e7 = first_order_defect(X, 1, 2, Dyadic::pow2(7), ones, set);
  const double ratio = e6 / e7;
  return {verdict(ratio >= 3.5 && ratio <= 4.5),
          {{"theta", json::array({"1/64", "1/128"})}, {"defect", json::array({e6, e7})}, {"ratio", ratio},
           {"accepted_ratio", json::array({3.5, 4.5})}}};
}

json component_diff_json(const std::vector<ComponentLineDiff>& lines) {
  json out = json::array();
  for (const auto& l : lines) {
    out.push_back({{"component", l.index},
                   {"derived", render_component_line(l.index, l.derived)},
                   {"fixture", render_component_line(l.index, l.stated)},
                   {"match", l.match},
                   {"derived_imaginary", l.derived_imaginary},
                   {"fixture_imaginary", l.stated_imaginary}});
  }
  return out;
}

Outcome claim_eq14(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  const ComponentMap derived = component_map(1, 2, set);
  const auto lines = diff_component_maps(derived, fx.component_increments);
  const bool all = std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.match; });
  json d = component_map_json(derived);
  d["comparison"] = component_diff_json(lines);
  return {verdict(all && derived.closes()), std::move(d)};
}

Outcome claim_eq14_tensor(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::TensorText, fx.betas);
  try {
    const ComponentMap derived = component_map(1, 2, set);
    const auto lines = diff_component_maps(derived, fx.component_increments);
    const bool all = std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.match; });
    json d = component_map_json(derived);
    d["comparison"] = component_diff_json(lines);
    return {verdict(all && derived.closes()), std::move(d)};
  } catch (const DegenerateBasis& e) {
    return {Status::Degenerate, {{"reason", e.what()}, {"variant", to_string(set.variant)}}};
  }
}

json classes_json(const RotationClasses& rc) {
  json out = json::array();
  for (const auto& cls : rc.classes) {
    json c = json::array();
    for (const auto& p : cls) c.push_back(pair_json(p));
    out.push_back(std::move(c));
  }
  return out;
}

bool contains(const std::vector<std::pair<int, int>>& v, std::pair<int, int> p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

Outcome claim_dup_rotations(const FixtureStore& fx) {
  const BetaSet set = build_beta_set(BetaVariant::SigmaExpansion, fx.betas);
  const RotationClasses rc = duplicate_rotation_scan(set);
  const auto& cls = rc.classes[rc.class_of_12];
  const Matrix8 target = kron(scale(-CDyadic::i(), pauli(2)), Matrix4::identity());
  bool all_target = true;
  for (const auto& [k, l] : cls) all_target = all_target && set[k] * set[l] == target;
  const bool ok = contains(cls, {5, 6}) && contains(cls, {7, 8}) && all_target;

  const BetaSet tensor = build_beta_set(BetaVariant::TensorText, fx.betas);
  const RotationClasses rt = duplicate_rotation_scan(tensor);
  json d = {{"classes", classes_json(rc)},
            {"class_of_1_2", classes_json(RotationClasses{{cls}, 0})[0]},
            {"class_product_is_minus_i_s2_kron_I4", all_target},
            {"tensor_text_class_of_1_2", classes_json(RotationClasses{{rt.classes[rt.class_of_12]}, 0})[0]}};
  return {verdict(ok), std::move(d)};
}

Outcome claim_eq15(const FixtureStore& fx) {
  const EBuild eb = build_E(build_beta_set(BetaVariant::SigmaExpansion, fx.betas));
  json alts = json::array();
  bool all = true;
  for (const auto& a : eb.alternates) {
    all = all && a.equal;
    alts.push_back({{"E", a.e_index}, {"primary", a.primary}, {"alternate", a.alternate}, {"equal", a.equal}});
  }
  return {verdict(all), {{"alternates", std::move(alts)}}};
}

SignedTable derived_e_table(const FixtureStore& fx) {
  return signed_table(build_E(build_beta_set(BetaVariant::SigmaExpansion, fx.betas)).e);
}

Outcome claim_table1(const FixtureStore& fx) {
  const SignedTable derived = derived_e_table(fx);
  const TableDiff d = compare_tables(derived, fx.table1);
  json j = table_diff_json(d, 'E', 'E');
  j["left"] = "derived";
  j["right"] = "fixture";
  j["derived_complete"] = derived.complete();
  return {verdict(d.identical == 64), std::move(j)};
}

Outcome claim_table_48_16(const FixtureStore& fx) {
  const SignedTable derived = derived_e_table(fx);
  const SignedTable oct = to_signed_table(fx.table2, 'e');
  const TableDiff d = compare_tables(oct, derived);
  const TableDiff lit = compare_tables(oct, fx.table1);
  json j = table_diff_json(d, 'e', 'E');
  j["left"] = "octonion table";
  j["right"] = "derived E table";
  j["stated"] = {{"identical", 48}, {"sign_flipped", 16}};
  j["transcribed_table1_counts"] = {{"identical", lit.identical}, {"sign_flipped", lit.sign_flipped},
                                    {"different", lit.different}};
  return {verdict(d.identical == 48 && d.sign_flipped == 16 && d.different == 0), std::move(j)};
}

Outcome claim_table2_structure(const FixtureStore& fx) {
  const StructureTable& t = fx.table2;
  const auto violations = table_violations(t);
  // Associator of imaginary units must be totally antisymmetric.
  int asym_failures = 0;
  int nonzero = 0;
  for (int a = 1; a < 8; ++a)
    for (int b = 1; b < 8; ++b)
      for (int c = 1; c < 8; ++c) {
        const auto ea = RealOctonion::unit(a);
        const auto eb = RealOctonion::unit(b);
        const auto ec = RealOctonion::unit(c);
        const RealOctonion abc = associator(ea, eb, ec, t);
        if (!abc.is_zero()) ++nonzero;
        if (associator(eb, ea, ec, t) != -abc || associator(ea, ec, eb, t) != -abc) ++asym_failures;
      }
  json triples = json::array();
  for (const auto& tr : t.positive_triples()) triples.push_back(tr);
  json d = {{"violations", violations},
            {"positive_triples", std::move(triples)},
            {"associator_antisymmetry_failures", asym_failures},
            {"nonzero_basis_associators", nonzero},
            {"matches_builtin_table", t == builtin_table()}};
  return {verdict(violations.empty() && asym_failures == 0), std::move(d)};
}

Outcome claim_split_basis(const FixtureStore& fx) {
  const SplitBasis s = build_split_basis();
  json per = json::array();
  bool all = true;
  for (int m = 0; m < 4; ++m) {
    const auto k = static_cast<std::size_t>(m);
    const Bioctonion sum = s.u[k] + s.ustar[k];
    const bool ok = sum == Bioctonion::unit(m);
    all = all && ok;
    per.push_back({{"m", m}, {"u", to_string(s.u[k])}, {"u_star", to_string(s.ustar[k])}, {"sum_is_e_m", ok},
                   {"u_null", is_null(s.u[k])}, {"u_star_null", is_null(s.ustar[k])}});
  }
  (void)fx;
  return {verdict(all), {{"elements", std::move(per)}}};
}

Outcome claim_eq18(const FixtureStore& fx) {
  const auto checks = verify_split_relations(build_split_basis(), fx.table2);
  json list = json::array();
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.confirmed) ++failed;
    list.push_back({{"identity", c.name}, {"confirmed", c.confirmed}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}});
  }
  return {verdict(failed == 0), {{"checked", checks.size()}, {"failed", failed}, {"identities", std::move(list)}}};
}

Outcome claim_zero_divisors(const FixtureStore& fx) {
  const SplitBasis s = build_split_basis();
  const Bioctonion p = oct_mul(s.u[0], s.ustar[0], fx.table2);
  const Bioctonion q = oct_mul(s.ustar[0], s.u[0], fx.table2);
  const bool ok = !s.u[0].is_zero() && !s.ustar[0].is_zero() && p.is_zero() && q.is_zero();
  json d = {{"u0*u0_star", to_string(p)},
            {"u0_star*u0", to_string(q)},
            {"u0_norm", quadratic_norm(s.u[0]).str()},
            {"u0_star_norm", quadratic_norm(s.ustar[0]).str()}};
  return {verdict(ok), std::move(d)};
}

Outcome claim_split_spinor(const FixtureStore&) {
  const Spinor phi = build_split_spinor();
  const SplitBasis s = build_split_basis();
  json per = json::array();
  bool all = true;
  for (std::size_t k = 0; k < 8; ++k) {
    const Bioctonion& expected = k < 4 ? s.u[k] : s.ustar[k - 4];
    const bool ok = phi[k] == expected;
    all = all && ok;
    per.push_back({{"component", k + 1}, {"value", to_string(phi[k])}, {"matches_split_basis", ok}});
  }
  return {verdict(all), {{"components", std::move(per)}}};
}

Outcome claim_eq22(const FixtureStore& fx) {
  const BlockDecomp ab = block_decompose(assemble_X(build_beta_set(BetaVariant::SigmaExpansion, fx.betas)));
  const YAudit audit = audit_Y_blocks(fx.y, ab.A, ab.B);
  json subs = json::array();
  for (const SubClaim* s : {&audit.first_blocks, &audit.second_blocks, &audit.stated_sum}) {
    subs.push_back({{"id", s->id}, {"statement", s->statement}, {"status", to_string(verdict(s->confirmed))},
                    {"cells", block_cells_json(s->cells)}});
  }
  return {verdict(audit.all_confirmed()), {{"subclaims", std::move(subs)}, {"b_minus_c", block_cells_json(audit.b_minus_c)}}};
}

struct Entry {
  ClaimInfo info;
  std::function<Outcome(const FixtureStore&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v = {
        {{"beta-forms", "Eq. 1, Eq. 2", {"Eq. 1", "Eq. 2"}, "beta_tensor_text / beta_sigma_expansion"}, claim_beta_forms},
        {{"beta8-consistency", "Eq. 2", {"Eq. 2"}, "beta_tensor_text / beta_sigma_expansion"}, claim_beta8},
        {{"beta-hermitian", "Eq. 2", {"Eq. 2"}, "build_beta_set / anticommutators"}, claim_beta_hermitian},
        {{"gram-orthogonality", "Eq. 2", {"Eq. 2"}, "gram"}, claim_gram},
        {{"eq3-norm-preserving", "Eq. 3-5", {"Eq. 3", "Eq. 4", "Eq. 5"}, "spinor_transform"}, claim_spinor_norm},
        {{"eq6-fixture", "Eq. 4, Eq. 6", {"Eq. 4", "Eq. 6"}, "assemble_X"}, claim_eq6},
        {{"x-traceless-hermitian", "Eq. 6", {"Eq. 6"}, "assemble_X / hermitian_symbolic"}, claim_x_traceless},
        {{"eq7-block-form", "Eq. 7-9", {"Eq. 7", "Eq. 8", "Eq. 9"}, "block_decompose"}, claim_block_form},
        {{"eq12-fixture", "Eq. 10, Eq. 12", {"Eq. 10", "Eq. 12"}, "rotation_operator"}, claim_eq12},
        {{"eq13-increment", "Eq. 11, Eq. 13", {"Eq. 11", "Eq. 13"}, "rotate_first_order"}, claim_eq13},
        {{"first-order-scaling", "Eq. 11, Eq. 13", {"Eq. 11", "Eq. 13"}, "rotate_exact / rotate_first_order"},
         claim_first_order_scaling},
        {{"eq14-map", "Eq. 14", {"Eq. 14"}, "extract_components"}, claim_eq14},
        {{"eq14-map-tensor-variant", "Eq. 14", {"Eq. 14"}, "extract_components"}, claim_eq14_tensor},
        {{"dup-rotations", "§3", {"§3"}, "duplicate_rotation_scan"}, claim_dup_rotations},
        {{"eq15-alternates", "Eq. 15", {"Eq. 15"}, "build_E"}, claim_eq15},
        {{"table1-self-consistency", "Table 1", {"Table 1"}, "signed_table / compare_tables"}, claim_table1},
        {{"table-48-16", "§4, Table 1, Table 2", {"§4", "Table 1", "Table 2"}, "compare_tables"}, claim_table_48_16},
        {{"table2-structure", "Table 2", {"Table 2"}, "oct_mul / associator"}, claim_table2_structure},
        {{"eq16-split-basis", "Eq. 16-17", {"Eq. 16", "Eq. 17"}, "build_split_basis"}, claim_split_basis},
        {{"eq18-relations", "Eq. 18", {"Eq. 18"}, "verify_split_relations"}, claim_eq18},
        {{"split-zero-divisors", "§5", {"§5"}, "oct_mul"}, claim_zero_divisors},
        {{"eq19-split-spinor", "Eq. 19", {"Eq. 19"}, "build_split_spinor"}, claim_split_spinor},
        {{"eq22-blocks", "Eq. 20-24", {"Eq. 20", "Eq. 21", "Eq. 22", "Eq. 23", "Eq. 24"}, "audit_Y_blocks"},
         claim_eq22},
    };
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return v;
  }();
  return list;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const std::vector<std::string>& required_anchors() {
  static const std::vector<std::string> anchors = [] {
    std::vector<std::string> v;
    for (int k = 1; k <= 24; ++k) v.push_back("Eq. " + std::to_string(k));
    for (const char* s : {"Table 1", "Table 2", "§3", "§4", "§5"}) v.emplace_back(s);
    return v;
  }();
  return anchors;
}

ClaimResult run_claim(const std::string& id, const FixtureStore& fixtures) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    Outcome o = e.run(fixtures);
    return {e.info.id, e.info.anchor, o.status, std::move(o.details)};
  }
  throw std::out_of_range("unknown claim id '" + id + "'");
}

ClaimReport run_all(const FixtureStore& fixtures) {
  std::vector<std::future<ClaimResult>> pending;
  for (const auto& e : entries()) {
    pending.push_back(std::async(std::launch::async, [&fixtures, &e] { return run_claim(e.info.id, fixtures); }));
  }
  ClaimReport report;
  report.fixtures = fixtures.digests;
  for (auto& p : pending) report.claims.push_back(p.get());
  return report;
}

Summary ClaimReport::summary() const {
  Summary s;
  for (const auto& c : claims) {
    switch (c.status) {
      case Status::Confirmed:
        ++s.confirmed;
        break;
      case Status::Refuted:
        ++s.refuted;
        break;
      case Status::Degenerate:
        ++s.degenerate;
        break;
    }
  }
  return s;
}

const ClaimResult* ClaimReport::find(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

json to_json(const ClaimReport& report) {
  json fixtures = json::array();
  for (const auto& f : report.fixtures) fixtures.push_back({{"name", f.name}, {"digest", f.digest}});
  json claims = json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  const Summary s = report.summary();
  return {{"version", report.version},
          {"fixtures", std::move(fixtures)},
          {"claims", std::move(claims)},
          {"summary", {{"confirmed", s.confirmed}, {"refuted", s.refuted}, {"degenerate", s.degenerate}}}};
}

ClaimReport report_from_json(const json& j) {
  ClaimReport r;
  r.version = j.at("version").get<std::string>();
  for (const auto& f : j.at("fixtures")) r.fixtures.push_back({f.at("name").get<std::string>(), f.at("digest").get<std::string>()});
  for (const auto& c : j.at("claims")) {
    r.claims.push_back({c.at("id").get<std::string>(), c.at("anchor").get<std::string>(),
                        status_from_string(c.at("status").get<std::string>()), c.at("details")});
  }
  const Summary s = r.summary();
  const json& js = j.at("summary");
  if (js.at("confirmed").get<int>() != s.confirmed || js.at("refuted").get<int>() != s.refuted ||
      js.at("degenerate").get<int>() != s.degenerate) {
    throw std::invalid_argument("report summary does not match its claims");
  }
  return r;
}

std::string to_markdown(const ClaimReport& report) {
  std::ostringstream os;
  const Summary s = report.summary();
  os << "# Verification report\n\n";
  os << "version: `" << report.version << "`\n\n";
  os << "## Fixtures\n\n| name | digest |\n|---|---|\n";
  for (const auto& f : report.fixtures) os << "| " << f.name << " | `" << f.digest << "` |\n";
  os << "\n## Summary\n\n";
  os << "confirmed: " << s.confirmed << ", refuted: " << s.refuted << ", degenerate: " << s.degenerate << "\n\n";
  os << "| id | anchor | status |\n|---|---|---|\n";
  for (const auto& c : report.claims) os << "| " << c.id << " | " << c.anchor << " | " << to_string(c.status) << " |\n";
  os << "\n## Claims\n";
  for (const auto& c : report.claims) {
    os << "\n### " << c.id << "\n\n";
    os << "anchor: " << c.anchor << "  \nstatus: **" << to_string(c.status) << "**\n\n";
    os << "```json\n" << c.details.dump(2) << "\n```\n";
  }
  return os.str();
}

}  // namespace octo
