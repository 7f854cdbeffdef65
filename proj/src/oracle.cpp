#include "motzkin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "motzkin/error.hpp"

namespace motzkin::oracle {

namespace {

void check_dyck_params(int k, int a) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  if (a < 0 || a > k - 1) throw Error(Errc::BadParams, "depth a must lie in [0, k-1]");
}

// Depth-first extension of a Motzkin prefix. `target` < 0 means any height.
class MotzkinWalker {
 public:
  MotzkinWalker(int n, int target, const ColorScheme& scheme)
      : n_(n), target_(target), scheme_(scheme) {}

  template <typename Visit>
  void run(Visit&& visit) {
    prefix_.clear();
    extend(0, visit);
  }

 private:
  template <typename Visit>
  void extend(int height, Visit& visit) {
    const int left = n_ - static_cast<int>(prefix_.size());
    if (left == 0) {
      if (target_ < 0 || height == target_) visit(prefix_, height);
      return;
    }
    // with `left` steps the height can rise by at most `left`
    if (target_ >= 0 && height + left < target_) return;
    if (target_ >= 0 && height - scheme_.order * left > target_) return;

    prefix_.push_back(Step::up());
    extend(height + 1, visit);
    prefix_.pop_back();

    for (int drop = 0; drop <= scheme_.order; ++drop) {
      const int next = height - drop;
      if (next < 0) break;
      if (drop == scheme_.order) {
        prefix_.push_back(Step::down(drop));
        extend(next, visit);
        prefix_.pop_back();
        continue;
      }
      const int colors = next == 0 ? scheme_.alpha[drop] : scheme_.beta[drop];
      for (int c = 1; c <= colors; ++c) {
        prefix_.push_back(Step::down(drop, c));
        extend(next, visit);
        prefix_.pop_back();
      }
    }
  }

  int n_;
  int target_;
  const ColorScheme& scheme_;
  StepList prefix_;
};

template <typename Keep>
std::vector<DyckPath> walk_dyck(int k, int a, int n, int m, Keep&& keep) {
  check_dyck_params(k, a);
  std::vector<DyckPath> out;
  if (n < 0 || m < 0 || m > n) return out;
  const int len = k * n;
  const int target = k * m;
  std::vector<bool> ups;
  ups.reserve(len);
  std::function<void(int)> extend = [&](int height) {
    const int left = len - static_cast<int>(ups.size());
    if (left == 0) {
      if (height == target) {
        DyckPath p = make_dyck(ups, k, a);
        if (keep(p)) out.push_back(std::move(p));
      }
      return;
    }
    if (height + left < target) return;
    if (height - (k - 1) * left > target) return;
    ups.push_back(true);
    extend(height + 1);
    ups.pop_back();
    if (height - (k - 1) >= -a) {
      ups.push_back(false);
      extend(height - (k - 1));
      ups.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace

std::vector<MotzkinPath> enumerate_motzkin(int n, int m, const ColorScheme& scheme) {
  scheme.check();
  std::vector<MotzkinPath> out;
  if (n < 0 || m < 0 || m > n) return out;
  MotzkinWalker walker(n, m, scheme);
  walker.run([&](const StepList& steps, int) { out.push_back(validate_motzkin(steps, scheme)); });
  return out;
}

std::vector<MotzkinPath> enumerate_motzkin_all_heights(int n, const ColorScheme& scheme) {
  scheme.check();
  std::vector<MotzkinPath> out;
  if (n < 0) return out;
  MotzkinWalker walker(n, -1, scheme);
  walker.run([&](const StepList& steps, int) { out.push_back(validate_motzkin(steps, scheme)); });
  return out;
}

std::vector<std::uint64_t> count_motzkin_by_height(int n, const ColorScheme& scheme) {
  scheme.check();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  if (n < 0) return counts;
  MotzkinWalker walker(n, -1, scheme);
  walker.run([&](const StepList&, int height) { ++counts[static_cast<std::size_t>(height)]; });
  return counts;
}

std::vector<DyckPath> enumerate_dyck(int k, int a, int n, int m) {
  return walk_dyck(k, a, n, m, [](const DyckPath&) { return true; });
}

std::vector<DyckPath> enumerate_fine(int k, int a, int r, int n, int m) {
  check_dyck_params(k, a);
  if (r < 1 || r > k - 1) throw Error(Errc::BadParams, "r must lie in [1, k-1]");
  return walk_dyck(k, a, n, m, [r](const DyckPath& p) { return !has_forbidden_hill(p, r); });
}

std::vector<DyckPath> enumerate_peak_parity(int k, int a, int i, int n, int m) {
  check_dyck_params(k, a);
  if (i < 0 || i > k - 1) throw Error(Errc::BadParams, "parity i must lie in [0, k-1]");
  if (n == 0) throw Error(Errc::EmptyLength, "peak parity is only defined for n > 0");
  return walk_dyck(k, a, n, m, [i](const DyckPath& p) { return peak_parity_of(p).matches(i); });
}

// ---------------------------------------------------------------------------
// trees

ChildSet ChildSet::all(int k) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  return ChildSet{std::vector<bool>(static_cast<std::size_t>(k) + 1, true)};
}

ChildSet ChildSet::from_subset(int k, const std::vector<int>& subset) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  ChildSet set{std::vector<bool>(static_cast<std::size_t>(k) + 1, false)};
  set.allowed.front() = true;
  set.allowed.back() = true;
  for (int j : subset) {
    if (j < 0 || j > k - 1) throw Error(Errc::BadParams, "S must be a subset of {0,...,k-1}");
    set.allowed[static_cast<std::size_t>(j)] = true;
  }
  return set;
}

ColorScheme ChildSet::scheme() const {
  const int k = static_cast<int>(allowed.size()) - 1;
  std::vector<int> alpha(static_cast<std::size_t>(k - 1));
  for (int j = 1; j <= k - 1; ++j) alpha[static_cast<std::size_t>(j - 1)] = allowed[j] ? 1 : 0;
  return ColorScheme(alpha, alpha);
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(int k, const ChildSet& children) : k_(k), children_(children) {}

  const std::vector<TreeNode>& trees(int edges) {
    if (auto it = memo_.find(edges); it != memo_.end()) return it->second;
    std::vector<TreeNode> out;
    if (edges == 0) {
      out.push_back(TreeNode{});
    } else {
      for (int c = 1; c <= std::min(k_, edges); ++c) {
        if (!children_.allowed[static_cast<std::size_t>(c)]) continue;
        std::vector<TreeNode> partial;
        compose(c, edges - c, partial, out);
      }
    }
    return memo_.emplace(edges, std::move(out)).first->second;
  }

 private:
  // Distribute `budget` edges over `slots` remaining subtrees.
  void compose(int slots, int budget, std::vector<TreeNode>& partial,
               std::vector<TreeNode>& out) {
    if (slots == 0) {
      if (budget == 0) out.push_back(TreeNode{partial});
      return;
    }
    for (int share = 0; share <= budget; ++share) {
      for (const auto& sub : trees(share)) {
        partial.push_back(sub);
        compose(slots - 1, budget - share, partial, out);
        partial.pop_back();
      }
    }
  }

  int k_;
  const ChildSet& children_;
  std::map<int, std::vector<TreeNode>> memo_;
};

}  // namespace

std::vector<KaryTree> enumerate_trees(int k, int n, const ChildSet& children) {
  if (k < 2 || n < 0) throw Error(Errc::BadParams, "need k >= 2 and n >= 0");
  if (static_cast<int>(children.allowed.size()) != k + 1) {
    throw Error(Errc::BadParams, "child set does not match k");
  }
  TreeBuilder builder(k, children);
  std::vector<KaryTree> out;
  for (const auto& root : builder.trees(n)) out.emplace_back(k, root);
  std::ranges::sort(out, {}, &KaryTree::child_counts);
  return out;
}

}  // namespace motzkin::oracle
