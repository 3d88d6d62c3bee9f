#pragma once

#include <optional>
#include <vector>

#include "twoway/bounds.hpp"
#include "twoway/inversions.hpp"
#include "twoway/run.hpp"
#include "twoway/words.hpp"

namespace twoway {

enum class PieceKind { Diagonal, Block };

struct DecompositionPiece {
  PieceKind kind = PieceKind::Diagonal;
  int from = 0, to = 0;  // run indices, from <= to
  // Diagonal, general mode: run index of l_z for z = pos(from)..pos(to).
  // Diagonal, sweeping mode: the chain l_0 <= l_1 <= ... <= l_{2n+1}.
  std::vector<int> witnesses;
  // Block: the almost periodic split of the output and the two side outputs
  // (general: Z_left, Z_right; sweeping: the whole outside zone in `left`).
  std::optional<AlmostPeriodic> periodic;
  Word left, right;
};

struct Decomposition {
  Mode mode = Mode::General;
  long bound = 0;
  std::vector<DecompositionPiece> pieces;
};

// Output of the subsequence of r[from..to] at positions in [lo, hi].
Word zone_output_by_pos(const Run& r, int from, int to, int lo, int hi);

// Sweeping mode scales bounds by the height H = 2|Q|-1. Passing height <= 0
// uses the largest crossing sequence of the run instead.

// Witnesses if r[from..to] is a b-diagonal in the given mode.
std::optional<std::vector<int>> diagonal_witnesses(const Run& r, int from, int to, long b, Mode mode,
                                                   int height = 0);
// Evidence if r[from..to] is a b-block in the given mode.
std::optional<DecompositionPiece> block_evidence(const Run& r, int from, int to, long b, Mode mode, int height = 0);

// Blocks are the extended blocks of the inversion classes; the gaps between
// them become diagonals. Returns nothing if a piece fails its definition.
std::optional<Decomposition> find_decomposition(const Run& r, long b, Mode mode, int height = 0);
// Re-checks coverage and every piece from the definitions.
bool verify_decomposition(const Run& r, const Decomposition& d, long b, Mode mode, int height = 0);

}  // namespace twoway
