#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "motzkin/paths.hpp"

namespace motzkin {

// --- row sums ----------------------------------------------------------------

/// (alpha,alpha)-path of any height -> (alpha+e1, alpha)-path of height 0: the
/// last U step leaving each level 0..m-1 becomes a D0 step of the new color
/// alpha_0+1. Throws InvalidScheme unless alpha == beta.
MotzkinPath rowsum_forward(const MotzkinPath& path);

/// Turns every D0 step of color alpha_0 (the new color) back into U. The input
/// scheme must be (alpha+e1, alpha) (InvalidScheme) and the height 0
/// (InvalidPath).
MotzkinPath rowsum_inverse(const MotzkinPath& path);

// --- Motzkin <-> k-Dyck -------------------------------------------------------

enum class BlockContext { EndsAtZero, EndsAbove };

/// The length-k U/D words a D_i step may expand to, in lexicographic order
/// with U < D. Color c selects words[c-1].
struct Codebook {
  int k = 2;
  int drop = 0;
  BlockContext context = BlockContext::EndsAbove;
  int depth = 0;
  std::optional<int> fine_r;
  std::vector<std::vector<bool>> words;  // true = U
};

/// Words with drop+1 down steps. In the EndsAtZero context the word starts at
/// height k*drop and words dipping below -depth are dropped, as are words
/// ending in U^r D when `fine_r` is set.
Codebook make_codebook(int k, int drop, BlockContext context, int depth,
                       std::optional<int> fine_r = std::nullopt);

/// Codebook sizes as a color scheme of order k-1. For the Dyck family this is
/// alpha_i = C(k,i+1) - C(k-a-1,i+1), beta_i = C(k,i+1).
ColorScheme dyck_scheme(int k, int a, std::optional<int> fine_r = std::nullopt);

/// U -> U^k, D_i of color c -> c-th codebook word. Throws SchemeMismatch when
/// the path's scheme is not dyck_scheme(k, a, fine_r), ColorOutOfCodebook for
/// a color past the codebook end.
DyckPath motzkin_to_dyck(const MotzkinPath& path, int k, int a,
                         std::optional<int> fine_r = std::nullopt);

/// Blockwise decoding; UndecodableBlock if a block is not a codebook word.
MotzkinPath dyck_to_motzkin(const DyckPath& path, int k, int a,
                            std::optional<int> fine_r = std::nullopt);

// --- peak parity --------------------------------------------------------------

/// The scheme (alpha, 1) whose paths correspond to depth-a peak-parity-0 paths:
/// alpha_i = 1 exactly when the block D^{i+1} U^{k-i-1} ending at 0 stays
/// above -a, i.e. when i >= k-1-a.
ColorScheme peak0_scheme(int k, int a);

/// U -> U^k, D_i -> D^{i+1} U^{k-i-1}. Throws SchemeMismatch.
DyckPath peak0_forward(const MotzkinPath& path, int k, int a);

/// Inverse of peak0_forward; NotParityZero unless every peak is at a multiple of k.
MotzkinPath peak0_inverse(const DyckPath& path);

/// P = U^{k-1} P' D with P of depth 0, semiheight 0 and peak parity k-1;
/// returns P' lowered by k-1 as a depth-(k-1) path of peak parity 0.
/// Throws BadDecomposition or WrongParity.
DyckPath peak_top_reduce(const DyckPath& path);

/// Inverse of peak_top_reduce.
DyckPath peak_top_expand(const DyckPath& path);

// --- trees --------------------------------------------------------------------

/// Depth-first over the non-root vertices: the edge into a vertex that is not
/// its parent's last child is U, the edge into the last of i children is
/// D_{i-1}. The path has order k-1 and scheme (1,1).
MotzkinPath tree_to_motzkin(const KaryTree& tree);

/// Inverse of tree_to_motzkin. Throws InvalidPath unless the path has order
/// k-1, all color counts 1 and height 0.
KaryTree motzkin_to_tree(const MotzkinPath& path, int k);

// --- binomial transform -------------------------------------------------------

/// Deletes every D0 step carrying the top color for its end height. The input
/// scheme is (alpha+e1, beta+e1) and the result lives in (alpha, beta).
/// Returns the shorter path and the 0-based positions removed.
std::pair<MotzkinPath, std::vector<int>> strip_new_color_levels(const MotzkinPath& path);

}  // namespace motzkin
