#include "octo/splitrep.hpp"

namespace octo {

Spinor build_split_spinor() {
  const CDyadic h = CDyadic::half();
  const CDyadic ih = CDyadic::i() * h;
  // (real unit, imaginary partner) for u0..u3.
  constexpr int pairs[4][2] = {{0, 7}, {1, 4}, {2, 5}, {3, 6}};
  Spinor phi;
  for (std::size_t m = 0; m < 4; ++m) {
    phi[m] = Bioctonion::unit(pairs[m][0], h) + Bioctonion::unit(pairs[m][1], ih);
    phi[m + 4] = Bioctonion::unit(pairs[m][0], h) + Bioctonion::unit(pairs[m][1], -ih);
  }
  return phi;
}

std::vector<BlockCellDiff> block_diff(const SymMatrix8& expected, const SymMatrix8& actual) {
  static const char* const names[2][2] = {{"TL", "TR"}, {"BL", "BR"}};
  std::vector<BlockCellDiff> out;
  for (std::size_t br = 0; br < 2; ++br)
    for (std::size_t bc = 0; bc < 2; ++bc)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          const LinearForm& e = expected(br * 4 + i, bc * 4 + j);
          const LinearForm& a = actual(br * 4 + i, bc * 4 + j);
          if (e != a) out.push_back({names[br][bc], static_cast<int>(i), static_cast<int>(j), e, a});
        }
  return out;
}

YAudit audit_Y_blocks(const YFixture& fix, const SymMatrix4& A, const SymMatrix4& B) {
  YAudit audit;

  audit.first_blocks.id = "first-matrix";
  audit.first_blocks.statement = "first matrix = [[A, A], [B, B]]";
  audit.first_blocks.cells = block_diff(assemble(A, A, B, B), fix.first);
  audit.first_blocks.confirmed = audit.first_blocks.cells.empty();

  audit.second_blocks.id = "second-matrix";
  audit.second_blocks.statement = "second matrix = [[C, -C], [D, -D]]";
  audit.second_blocks.cells = block_diff(assemble(fix.C, -fix.C, fix.D, -fix.D), fix.second);
  audit.second_blocks.confirmed = audit.second_blocks.cells.empty();

  // Formal block sum versus the right-hand side as written.
  const SymMatrix8 formal = assemble(A + fix.C, A - fix.C, B + fix.D, B - fix.D);
  const SymMatrix8 stated = assemble(A + B, A - fix.C, B + fix.D, B - fix.D);
  audit.stated_sum.id = "stated-sum";
  audit.stated_sum.statement = "[[A, A], [B, B]] + [[C, -C], [D, -D]] = [[A+B, A-C], [B+D, B-D]]";
  audit.stated_sum.cells = block_diff(formal, stated);
  audit.stated_sum.confirmed = audit.stated_sum.cells.empty();

  const SymMatrix4 bc = B - fix.C;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!bc(i, j).is_zero()) {
        audit.b_minus_c.push_back({"B-C", static_cast<int>(i), static_cast<int>(j), LinearForm{}, bc(i, j)});
      }
  return audit;
}

std::string to_string(YSource s) { return s == YSource::Fixture ? "fixture" : "reconstructed"; }

SymMatrix8 y_matrix(YSource source, const YFixture& fix, const BlockDecomp& ab) {
  if (source == YSource::Fixture) return fix.first + fix.second;
  return assemble(ab.A + fix.C, ab.A - fix.C, ab.B + fix.D, ab.B - fix.D);
}

ApproxSpinor split_transform(const Spinor& phi, const ComplexMatrix8& Y, const ExpOptions& opts) {
  return spinor_transform(phi, Y, opts);
}

}  // namespace octo
