#pragma once

#include "octo/expm.hpp"
#include "octo/linear_form.hpp"
#include "octo/so8rot.hpp"

#include <string>
#include <vector>

namespace octo {

/// φ = (u0, u1, u2, u3, u0*, u1*, u2*, u3*), written directly in the e-basis:
/// ½(1 + i e7), ½(e1 + i e4), ..., ½(e3 - i e6).
Spinor build_split_spinor();

/// The two literal matrices whose sum is Y, and the stated C and D blocks.
/// Stored exactly as transcribed, anomalies included.
struct YFixture {
  SymMatrix8 first;
  SymMatrix8 second;
  SymMatrix4 C;
  SymMatrix4 D;
};

struct BlockCellDiff {
  std::string block;  // "TL", "TR", "BL", "BR"
  int row;            // 0-based inside the block
  int col;
  LinearForm expected;
  LinearForm actual;
};

struct SubClaim {
  std::string id;
  std::string statement;
  bool confirmed = false;
  std::vector<BlockCellDiff> cells;
};

struct YAudit {
  SubClaim first_blocks;   // first = [[A, A], [B, B]]
  SubClaim second_blocks;  // second = [[C, -C], [D, -D]]
  SubClaim stated_sum;     // [[A+B, A-C], [B+D, B-D]] vs the formal block sum
  std::vector<BlockCellDiff> b_minus_c;  // nonzero cells of B - C

  bool all_confirmed() const {
    return first_blocks.confirmed && second_blocks.confirmed && stated_sum.confirmed;
  }
};

/// Block-structure audit of Y against the derived A, B.
YAudit audit_Y_blocks(const YFixture& fix, const SymMatrix4& A, const SymMatrix4& B);

/// Cellwise comparison of two 8x8 matrices, reported per 4x4 block.
std::vector<BlockCellDiff> block_diff(const SymMatrix8& expected, const SymMatrix8& actual);

enum class YSource { Fixture, Reconstructed };

std::string to_string(YSource s);

/// Fixture: first + second as transcribed. Reconstructed: the formal block
/// sum [[A+C, A-C], [B+D, B-D]] from derived A, B and the transcribed C, D.
SymMatrix8 y_matrix(YSource source, const YFixture& fix, const BlockDecomp& ab);

/// φ' = e^Y φ.
ApproxSpinor split_transform(const Spinor& phi, const ComplexMatrix8& Y, const ExpOptions& opts = {});

}  // namespace octo
