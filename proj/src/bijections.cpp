#include "motzkin/bijections.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "motzkin/error.hpp"

namespace motzkin {

namespace {

int final_color(int count, int drop, int order) { return drop == order ? 0 : count; }

}  // namespace

// ---------------------------------------------------------------------------
// row sums

MotzkinPath rowsum_forward(const MotzkinPath& path) {
  const ColorScheme& scheme = path.scheme();
  if (scheme.alpha != scheme.beta) {
    throw Error(Errc::InvalidScheme, "row-sum map needs alpha == beta, got " + to_string(scheme));
  }
  const auto heights = path.profile();
  StepList out = path.steps();
  // Scanning right to left, the first U met that leaves level y is the last
  // one to do so.
  int next_level = path.height() - 1;
  for (int pos = path.length() - 1; pos >= 0 && next_level >= 0; --pos) {
    const auto p = static_cast<std::size_t>(pos);
    if (out[p].is_up() && heights[p] == next_level) {
      out[p] = Step::down(0, scheme.alpha[0] + 1);
      --next_level;
    }
  }
  return validate_motzkin(std::move(out), scheme.bump_alpha());
}

MotzkinPath rowsum_inverse(const MotzkinPath& path) {
  const ColorScheme& scheme = path.scheme();
  if (ColorScheme(scheme.beta, scheme.beta).bump_alpha() != scheme) {
    throw Error(Errc::InvalidScheme,
                "inverse row-sum map needs a scheme of the form (alpha+e1, alpha), got " +
                    to_string(scheme));
  }
  if (path.height() != 0) throw Error(Errc::InvalidPath, "inverse row-sum map needs height 0");
  StepList out = path.steps();
  const int fresh = scheme.alpha[0];
  for (auto& s : out) {
    if (!s.is_up() && s.drop == 0 && s.color == fresh) s = Step::up();
  }
  return validate_motzkin(std::move(out), ColorScheme(scheme.beta, scheme.beta));
}

// ---------------------------------------------------------------------------
// codebooks

Codebook make_codebook(int k, int drop, BlockContext context, int depth, std::optional<int> fine_r) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  if (drop < 0 || drop > k - 1) throw Error(Errc::BadParams, "drop index must lie in [0, k-1]");
  if (depth < 0 || depth > k - 1) throw Error(Errc::BadParams, "depth a must lie in [0, k-1]");
  if (fine_r && (*fine_r < 1 || *fine_r > k - 1)) {
    throw Error(Errc::BadParams, "r must lie in [1, k-1]");
  }
  Codebook book{k, drop, context, depth, fine_r, {}};
  const int downs = drop + 1;
  // Lexicographic with U < D is the order of the bitmask where bit (k-1-j)
  // set means step j is D.
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    if (std::popcount(mask) != downs) continue;
    std::vector<bool> word(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) word[static_cast<std::size_t>(j)] = !((mask >> (k - 1 - j)) & 1U);
    if (context == BlockContext::EndsAtZero) {
      int height = k * drop;
      bool ok = true;
      for (bool up : word) {
        height += up ? 1 : 1 - k;
        ok = ok && height >= -depth;
      }
      if (!ok) continue;
      if (fine_r) {
        // the block ends at 0; a U^r D tail would be a forbidden hill
        bool hill = !word.back();
        for (int j = k - 1 - *fine_r; j < k - 1; ++j) hill = hill && word[static_cast<std::size_t>(j)];
        if (hill) continue;
      }
    }
    book.words.push_back(std::move(word));
  }
  return book;
}

ColorScheme dyck_scheme(int k, int a, std::optional<int> fine_r) {
  std::vector<int> alpha(static_cast<std::size_t>(k - 1));
  std::vector<int> beta(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < k - 1; ++i) {
    alpha[static_cast<std::size_t>(i)] =
        static_cast<int>(make_codebook(k, i, BlockContext::EndsAtZero, a, fine_r).words.size());
    beta[static_cast<std::size_t>(i)] =
        static_cast<int>(make_codebook(k, i, BlockContext::EndsAbove, a, fine_r).words.size());
  }
  return ColorScheme(alpha, beta);
}

namespace {

// Codebooks for every (drop, context) pair, indexed [drop][context].
std::vector<std::array<Codebook, 2>> all_codebooks(int k, int a, std::optional<int> fine_r) {
  std::vector<std::array<Codebook, 2>> books;
  for (int i = 0; i < k; ++i) {
    books.push_back({make_codebook(k, i, BlockContext::EndsAtZero, a, fine_r),
                     make_codebook(k, i, BlockContext::EndsAbove, a, fine_r)});
  }
  return books;
}

}  // namespace

DyckPath motzkin_to_dyck(const MotzkinPath& path, int k, int a, std::optional<int> fine_r) {
  const ColorScheme expected = dyck_scheme(k, a, fine_r);
  if (path.scheme() != expected) {
    throw Error(Errc::SchemeMismatch, "path scheme " + to_string(path.scheme()) +
                                          " differs from " + to_string(expected));
  }
  const auto books = all_codebooks(k, a, fine_r);
  const auto heights = path.profile();
  std::vector<bool> ups;
  ups.reserve(static_cast<std::size_t>(path.length() * k));
  for (std::size_t pos = 0; pos < path.steps().size(); ++pos) {
    const Step& s = path.steps()[pos];
    if (s.is_up()) {
      ups.insert(ups.end(), static_cast<std::size_t>(k), true);
      continue;
    }
    const bool at_zero = heights[pos + 1] == 0;
    const Codebook& book = books[static_cast<std::size_t>(s.drop)][at_zero ? 0 : 1];
    const int index = s.drop == k - 1 ? 0 : s.color - 1;
    if (index < 0 || index >= static_cast<int>(book.words.size())) {
      throw Error(Errc::ColorOutOfCodebook, "color " + std::to_string(s.color) + " of D" +
                                                std::to_string(s.drop) + " at step " +
                                                std::to_string(pos));
    }
    const auto& word = book.words[static_cast<std::size_t>(index)];
    ups.insert(ups.end(), word.begin(), word.end());
  }
  return make_dyck(std::move(ups), k, a);
}

MotzkinPath dyck_to_motzkin(const DyckPath& path, int k, int a, std::optional<int> fine_r) {
  if (path.k() != k || path.depth() != a) {
    throw Error(Errc::BadParams, "path has k=" + std::to_string(path.k()) + ", a=" +
                                     std::to_string(path.depth()));
  }
  const ColorScheme scheme = dyck_scheme(k, a, fine_r);
  const auto books = all_codebooks(k, a, fine_r);
  const auto& ups = path.ups();
  StepList out;
  int level = 0;  // Motzkin height = Dyck height / k at block boundaries
  for (std::size_t start = 0; start < ups.size(); start += static_cast<std::size_t>(k)) {
    const std::vector<bool> word(ups.begin() + static_cast<std::ptrdiff_t>(start),
                                 ups.begin() + static_cast<std::ptrdiff_t>(start) + k);
    const int downs = static_cast<int>(std::ranges::count(word, false));
    if (downs == 0) {
      out.push_back(Step::up());
      ++level;
      continue;
    }
    const int drop = downs - 1;
    level -= drop;
    const Codebook& book = books[static_cast<std::size_t>(drop)][level == 0 ? 0 : 1];
    const auto it = std::ranges::find(book.words, word);
    if (it == book.words.end()) {
      throw Error(Errc::UndecodableBlock, "block at step " + std::to_string(start) +
                                              " is not in the D" + std::to_string(drop) +
                                              " codebook");
    }
    const int color = static_cast<int>(it - book.words.begin()) + 1;
    out.push_back(Step::down(drop, drop == k - 1 ? 0 : color));
  }
  return validate_motzkin(std::move(out), scheme);
}

// ---------------------------------------------------------------------------
// peak parity

ColorScheme peak0_scheme(int k, int a) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  if (a < 0 || a > k - 1) throw Error(Errc::BadParams, "depth a must lie in [0, k-1]");
  std::vector<int> alpha(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < k - 1; ++i) alpha[static_cast<std::size_t>(i)] = i >= k - 1 - a ? 1 : 0;
  return ColorScheme(alpha, std::vector<int>(static_cast<std::size_t>(k - 1), 1));
}

DyckPath peak0_forward(const MotzkinPath& path, int k, int a) {
  const ColorScheme expected = peak0_scheme(k, a);
  if (path.scheme() != expected) {
    throw Error(Errc::SchemeMismatch, "path scheme " + to_string(path.scheme()) +
                                          " differs from " + to_string(expected));
  }
  std::vector<bool> ups;
  for (const Step& s : path.steps()) {
    if (s.is_up()) {
      ups.insert(ups.end(), static_cast<std::size_t>(k), true);
    } else {
      ups.insert(ups.end(), static_cast<std::size_t>(s.drop) + 1, false);
      ups.insert(ups.end(), static_cast<std::size_t>(k - s.drop - 1), true);
    }
  }
  return make_dyck(std::move(ups), k, a);
}

MotzkinPath peak0_inverse(const DyckPath& path) {
  const int k = path.k();
  const ColorScheme scheme = peak0_scheme(k, path.depth());
  if (path.length() > 0 && !peak_parity_of(path).matches(0)) {
    throw Error(Errc::NotParityZero, "some peak height is not a multiple of k");
  }
  const auto& ups = path.ups();
  StepList out;
  for (std::size_t start = 0; start < ups.size(); start += static_cast<std::size_t>(k)) {
    int downs = 0;
    while (downs < k && !ups[start + static_cast<std::size_t>(downs)]) ++downs;
    for (int j = downs; j < k; ++j) {
      if (!ups[start + static_cast<std::size_t>(j)]) {
        throw Error(Errc::NotParityZero, "block at step " + std::to_string(start) +
                                             " is not of the form D^i U^(k-i)");
      }
    }
    if (downs == 0) {
      out.push_back(Step::up());
    } else {
      const int drop = downs - 1;
      out.push_back(Step::down(drop, final_color(1, drop, k - 1)));
    }
  }
  return validate_motzkin(std::move(out), scheme);
}

DyckPath peak_top_reduce(const DyckPath& path) {
  const int k = path.k();
  if (path.depth() != 0 || path.final_height() != 0 || path.length() == 0) {
    throw Error(Errc::BadDecomposition, "need a nonempty depth-0 path ending at height 0");
  }
  const auto& ups = path.ups();
  const auto lead = static_cast<std::size_t>(k - 1);
  const bool shape = std::all_of(ups.begin(), ups.begin() + static_cast<std::ptrdiff_t>(lead),
                                 [](bool u) { return u; }) &&
                     !ups.back();
  if (!shape) throw Error(Errc::BadDecomposition, "path does not read U^(k-1) ... D");
  if (!peak_parity_of(path).matches(k - 1)) {
    throw Error(Errc::WrongParity, "peak parity is not k-1");
  }
  std::vector<bool> middle(ups.begin() + static_cast<std::ptrdiff_t>(lead), ups.end() - 1);
  return make_dyck(std::move(middle), k, k - 1);
}

DyckPath peak_top_expand(const DyckPath& path) {
  const int k = path.k();
  if (path.depth() != k - 1 || path.final_height() != 0) {
    throw Error(Errc::BadDecomposition, "need a depth-(k-1) path ending at height 0");
  }
  if (path.length() > 0 && !peak_parity_of(path).matches(0)) {
    throw Error(Errc::WrongParity, "peak parity is not 0");
  }
  std::vector<bool> ups(static_cast<std::size_t>(k - 1), true);
  ups.insert(ups.end(), path.ups().begin(), path.ups().end());
  ups.push_back(false);
  return make_dyck(std::move(ups), k, 0);
}

// ---------------------------------------------------------------------------
// trees

namespace {

void encode(const TreeNode& node, int order, StepList& out) {
  const std::size_t n = node.children.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j + 1 < n) {
      out.push_back(Step::up());
    } else {
      const int drop = static_cast<int>(n) - 1;
      out.push_back(Step::down(drop, final_color(1, drop, order)));
    }
    encode(node.children[j], order, out);
  }
}

TreeNode assemble(int vertex, const std::vector<std::vector<int>>& children) {
  TreeNode node;
  for (int c : children[static_cast<std::size_t>(vertex)]) node.children.push_back(assemble(c, children));
  return node;
}

}  // namespace

MotzkinPath tree_to_motzkin(const KaryTree& tree) {
  const int order = tree.k() - 1;
  StepList steps;
  encode(tree.root(), order, steps);
  return validate_motzkin(std::move(steps), ColorScheme::uniform(order, 1));
}

KaryTree motzkin_to_tree(const MotzkinPath& path, int k) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  if (path.scheme() != ColorScheme::uniform(k - 1, 1)) {
    throw Error(Errc::InvalidPath, "tree paths use order k-1 and scheme (1,1), got " +
                                       to_string(path.scheme()));
  }
  if (path.height() != 0) throw Error(Errc::InvalidPath, "tree paths end at height 0");
  const auto heights = path.profile();
  const int n = path.length();
  // Vertex 0 is the root; the edge at step p leads to vertex p+1.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, -1);
  std::map<int, int> last_up;  // end height -> most recent unmatched U step
  for (int p = 0; p < n; ++p) {
    const Step& s = path.steps()[static_cast<std::size_t>(p)];
    const int y = heights[static_cast<std::size_t>(p)];
    if (s.is_up()) {
      last_up[y + 1] = p;
      continue;
    }
    // D_i from height y: its i left siblings are the last U steps ending at
    // heights y-i+1..y, i.e. the ones its laser hits.
    std::vector<int> group;
    for (int h = y - s.drop + 1; h <= y; ++h) {
      auto it = last_up.find(h);
      if (it == last_up.end()) throw Error(Errc::InvalidPath, "unmatched D step at " + std::to_string(p));
      group.push_back(it->second);
      last_up.erase(it);
    }
    group.push_back(p);
    std::ranges::sort(group);
    // The first sibling follows its parent immediately in depth-first order,
    // so the parent is the vertex reached by the edge just before the group.
    const int owner = group.front();
    for (int e : group) parent[static_cast<std::size_t>(e) + 1] = owner;
  }
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    const int par = parent[static_cast<std::size_t>(v)];
    if (par < 0) throw Error(Errc::InvalidPath, "edge " + std::to_string(v - 1) + " has no parent");
    children[static_cast<std::size_t>(par)].push_back(v);
  }
  return KaryTree(k, assemble(0, children));
}

// ---------------------------------------------------------------------------
// binomial transform

std::pair<MotzkinPath, std::vector<int>> strip_new_color_levels(const MotzkinPath& path) {
  const ColorScheme& scheme = path.scheme();
  if (scheme.alpha[0] < 1 || scheme.beta[0] < 1) {
    throw Error(Errc::InvalidScheme, "scheme " + to_string(scheme) + " has no added D0 color");
  }
  ColorScheme base = scheme;
  base.alpha[0] -= 1;
  base.beta[0] -= 1;
  const auto heights = path.profile();
  StepList kept;
  std::vector<int> removed;
  for (std::size_t pos = 0; pos < path.steps().size(); ++pos) {
    const Step& s = path.steps()[pos];
    if (!s.is_up() && s.drop == 0 && s.drop < scheme.order) {
      const int top = heights[pos + 1] == 0 ? scheme.alpha[0] : scheme.beta[0];
      if (s.color == top) {
        removed.push_back(static_cast<int>(pos));
        continue;
      }
    }
    kept.push_back(s);
  }
  return {validate_motzkin(std::move(kept), base), std::move(removed)};
}

}  // namespace motzkin
