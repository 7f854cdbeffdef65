#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/paths.hpp"

// Exhaustive generators. Nothing here uses recurrences or generating
// functions: every count is obtained by walking all candidate objects, so the
// results can be used to check the Riordan and closed-form machinery.
namespace motzkin::oracle {

/// All (alpha, beta)-colored Motzkin paths of length n ending at height m,
/// ordered by step kind (U < D0 < ... < Dl), then color.
std::vector<MotzkinPath> enumerate_motzkin(int n, int m, const ColorScheme& scheme);

/// Union over every final height; same ordering.
std::vector<MotzkinPath> enumerate_motzkin_all_heights(int n, const ColorScheme& scheme);

/// Number of valid paths of length n at each final height 0..n, by a
/// non-materializing depth-first walk over every step/color choice.
std::vector<std::uint64_t> count_motzkin_by_height(int n, const ColorScheme& scheme);

/// Depth-a k-Dyck paths of semilength n and semiheight m (U < D order).
std::vector<DyckPath> enumerate_dyck(int k, int a, int n, int m);

/// The subset of enumerate_dyck lacking a U^r D_{k-1} hill at height 0.
std::vector<DyckPath> enumerate_fine(int k, int a, int r, int n, int m);

/// The subset of enumerate_dyck whose peaks are all congruent to i mod k
/// (paths without peaks included). Throws EmptyLength for n = 0.
std::vector<DyckPath> enumerate_peak_parity(int k, int a, int i, int n, int m);

/// Allowed child counts for S-restricted trees. Leaves and k-child vertices are
/// always allowed; a vertex with 1 <= j <= k-1 children needs j in S.
struct ChildSet {
  std::vector<bool> allowed;  // index = child count, size k+1

  static ChildSet all(int k);
  /// From a subset S of {0, ..., k-1}; membership of 0 is irrelevant.
  static ChildSet from_subset(int k, const std::vector<int>& subset);
  /// The scheme (alpha_S, alpha_S) of order k-1 with alpha_{j-1} = [j in S].
  ColorScheme scheme() const;
};

/// Every k-ary tree with n edges whose vertices respect `children`, ordered by
/// the depth-first child-count sequence.
std::vector<KaryTree> enumerate_trees(int k, int n, const ChildSet& children);

}  // namespace motzkin::oracle
