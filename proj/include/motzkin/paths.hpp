#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace motzkin {

/// Order l plus the two l-tuples of color counts. alpha[i] colors a D_i step
/// that ends at height 0, beta[i] one that ends above 0.
struct ColorScheme {
  int order = 1;
  std::vector<int> alpha;
  std::vector<int> beta;

  ColorScheme() = default;
  ColorScheme(std::vector<int> alpha_counts, std::vector<int> beta_counts);

  /// Throws Error(InvalidScheme) unless order >= 1, both tuples have length
  /// order and every entry is non-negative.
  void check() const;

  /// Same tuples with alpha[0] incremented (the "+e1" shift).
  ColorScheme bump_alpha() const;
  /// Both alpha[0] and beta[0] incremented.
  ColorScheme bump_both() const;

  static ColorScheme uniform(int order, int value);

  friend bool operator==(const ColorScheme&, const ColorScheme&) = default;
};

std::string to_string(const ColorScheme& scheme);

/// U, or D_i with drop index i. Colors are 1-based; 0 means "uncolored".
struct Step {
  enum class Kind : std::uint8_t { Up, Down };

  Kind kind = Kind::Up;
  int drop = 0;
  int color = 0;

  static constexpr Step up() { return Step{}; }
  static constexpr Step down(int drop, int color = 0) {
    return Step{Kind::Down, drop, color};
  }

  constexpr bool is_up() const { return kind == Kind::Up; }
  constexpr int delta() const { return is_up() ? 1 : -drop; }

  friend constexpr auto operator<=>(const Step&, const Step&) = default;
};

using StepList = std::vector<Step>;

/// "U", "D<i>" or "D<i>:<c>", space separated.
std::string format_steps(std::span<const Step> steps);
StepList parse_steps(std::string_view text);

/// A validated (alpha, beta)-colored Motzkin path of order l.
class MotzkinPath {
 public:
  MotzkinPath() = default;

  const ColorScheme& scheme() const { return scheme_; }
  const StepList& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int height() const { return height_; }
  /// Heights after each step; entry 0 is the start (always 0).
  std::vector<int> profile() const;

  std::string to_text() const { return format_steps(steps_); }

  friend bool operator==(const MotzkinPath& a, const MotzkinPath& b) {
    return a.scheme_ == b.scheme_ && a.steps_ == b.steps_;
  }
  friend auto operator<=>(const MotzkinPath& a, const MotzkinPath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  friend MotzkinPath validate_motzkin(StepList steps, const ColorScheme& scheme);

  ColorScheme scheme_;
  StepList steps_;
  int height_ = 0;
};

/// Throws Error with NegativeHeight, ColorOutOfRange or BadDropIndex.
MotzkinPath validate_motzkin(StepList steps, const ColorScheme& scheme);

/// A generalized k-Dyck path of depth a: steps U = (1,1) and D = (1,1-k),
/// never below y = -a, with length and final height divisible by k.
class DyckPath {
 public:
  DyckPath() = default;

  int k() const { return k_; }
  int depth() const { return depth_; }
  /// true = U, false = D_{k-1}.
  const std::vector<bool>& ups() const { return ups_; }
  int length() const { return static_cast<int>(ups_.size()); }
  int semilength() const { return length() / k_; }
  int semiheight() const { return final_height_ / k_; }
  int final_height() const { return final_height_; }
  std::vector<int> profile() const;

  /// The same step sequence viewed as U / D<k-1> steps.
  StepList steps() const;
  std::string to_text() const { return format_steps(steps()); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.k_ == b.k_ && a.depth_ == b.depth_ && a.ups_ == b.ups_;
  }
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) {
    return a.text_key() <=> b.text_key();
  }

 private:
  friend DyckPath validate_dyck(std::span<const Step> steps, int k, int a);
  friend DyckPath make_dyck(std::vector<bool> ups, int k, int a);

  std::string text_key() const;

  int k_ = 2;
  int depth_ = 0;
  std::vector<bool> ups_;
  int final_height_ = 0;
};

/// Throws Error with BadParams, BadDropIndex, DepthViolation or NotSemialigned.
DyckPath validate_dyck(std::span<const Step> steps, int k, int a);
/// Same checks, from a U/D bit sequence (true = U).
DyckPath make_dyck(std::vector<bool> ups, int k, int a);

/// Heights of every U D_{k-1} peak (height of the U's right end), left to right.
std::vector<int> peaks_of(const DyckPath& path);

/// Result of classifying peak heights modulo k.
struct PeakParity {
  enum class Kind : std::uint8_t { Uniform, Mixed, Any };

  Kind kind = Kind::Mixed;
  int residue = 0;  // meaningful for Uniform only

  /// A path with no peaks satisfies every parity class vacuously.
  bool matches(int i) const {
    return kind == Kind::Any || (kind == Kind::Uniform && residue == i);
  }

  friend bool operator==(const PeakParity&, const PeakParity&) = default;
};

/// Throws Error(EmptyPath) for the empty path.
PeakParity peak_parity_of(const DyckPath& path);

/// True iff some U^r D_{k-1} subpath ends at height 0. Requires 1 <= r <= k-1.
bool has_forbidden_hill(const DyckPath& path, int r);

/// Ordered tree node; children are ordered but not positional.
struct TreeNode {
  std::vector<TreeNode> children;

  int edge_count() const;
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// A rooted tree in which every vertex has at most k children.
class KaryTree {
 public:
  KaryTree() = default;
  KaryTree(int k, TreeNode root);

  int k() const { return k_; }
  const TreeNode& root() const { return root_; }
  int edges() const { return root_.edge_count(); }

  /// Child counts of every vertex in depth-first, left-to-right order.
  std::vector<int> child_counts() const;

  /// Balanced parentheses: "(" children ")" per vertex, root outermost.
  std::string to_text() const;

  friend bool operator==(const KaryTree&, const KaryTree&) = default;

 private:
  int k_ = 2;
  TreeNode root_;
};

/// Parses the parenthesis form; throws ParseError or BadParams (arity > k).
KaryTree parse_tree(std::string_view text, int k);

// JSON exchange formats.
nlohmann::json to_json(const ColorScheme& scheme);
ColorScheme scheme_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MotzkinPath& path);
MotzkinPath motzkin_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DyckPath& path);
DyckPath dyck_from_json(const nlohmann::json& j);
nlohmann::json to_json(const KaryTree& tree);
KaryTree tree_from_json(const nlohmann::json& j);

}  // namespace motzkin
