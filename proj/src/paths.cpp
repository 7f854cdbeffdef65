#include "motzkin/paths.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "motzkin/error.hpp"

namespace motzkin {

namespace {

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw Error(Errc::ParseError,
                "bad integer '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

ColorScheme::ColorScheme(std::vector<int> alpha_counts, std::vector<int> beta_counts)
    : order(static_cast<int>(alpha_counts.size())),
      alpha(std::move(alpha_counts)),
      beta(std::move(beta_counts)) {
  check();
}

void ColorScheme::check() const {
  if (order < 1) throw Error(Errc::InvalidScheme, "order must be >= 1");
  if (static_cast<int>(alpha.size()) != order || static_cast<int>(beta.size()) != order) {
    throw Error(Errc::InvalidScheme, "alpha and beta must both have length " +
                                         std::to_string(order));
  }
  auto negative = [](int v) { return v < 0; };
  if (std::ranges::any_of(alpha, negative) || std::ranges::any_of(beta, negative)) {
    throw Error(Errc::InvalidScheme, "color counts must be non-negative");
  }
}

ColorScheme ColorScheme::bump_alpha() const {
  ColorScheme out = *this;
  out.alpha[0] += 1;
  return out;
}

ColorScheme ColorScheme::bump_both() const {
  ColorScheme out = *this;
  out.alpha[0] += 1;
  out.beta[0] += 1;
  return out;
}

ColorScheme ColorScheme::uniform(int order, int value) {
  return ColorScheme(std::vector<int>(order, value), std::vector<int>(order, value));
}

std::string to_string(const ColorScheme& scheme) {
  return "(" + join_ints(scheme.alpha) + "),(" + join_ints(scheme.beta) + ")";
}

// ---------------------------------------------------------------------------
// step text format

std::string format_steps(std::span<const Step> steps) {
  std::string out;
  for (const Step& s : steps) {
    if (!out.empty()) out += ' ';
    if (s.is_up()) {
      out += 'U';
      continue;
    }
    out += 'D';
    out += std::to_string(s.drop);
    if (s.color != 0) {
      out += ':';
      out += std::to_string(s.color);
    }
  }
  return out;
}

StepList parse_steps(std::string_view text) {
  StepList steps;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "U") {
      steps.push_back(Step::up());
      continue;
    }
    if (token.size() < 2 || token[0] != 'D') {
      throw Error(Errc::ParseError, "unknown step '" + token + "'");
    }
    std::string_view body(token);
    body.remove_prefix(1);
    auto colon = body.find(':');
    int drop = parse_int(body.substr(0, colon), token);
    int color = 0;
    if (colon != std::string_view::npos) {
      color = parse_int(body.substr(colon + 1), token);
      if (color < 1) throw Error(Errc::ParseError, "colors are 1-based in '" + token + "'");
    }
    if (drop < 0) throw Error(Errc::ParseError, "negative drop in '" + token + "'");
    steps.push_back(Step::down(drop, color));
  }
  return steps;
}

// ---------------------------------------------------------------------------
// Motzkin paths

MotzkinPath validate_motzkin(StepList steps, const ColorScheme& scheme) {
  scheme.check();
  const int order = scheme.order;
  int height = 0;
  for (std::size_t pos = 0; pos < steps.size(); ++pos) {
    const Step& s = steps[pos];
    const std::string where = " at step " + std::to_string(pos);
    if (s.is_up()) {
      if (s.color != 0) throw Error(Errc::ColorOutOfRange, "U steps are uncolored" + where);
      ++height;
      continue;
    }
    if (s.drop < 0 || s.drop > order) {
      throw Error(Errc::BadDropIndex, "D" + std::to_string(s.drop) + " with order " +
                                          std::to_string(order) + where);
    }
    height -= s.drop;
    if (height < 0) throw Error(Errc::NegativeHeight, "path dips below 0" + where);
    if (s.drop == order) {
      if (s.color != 0) {
        throw Error(Errc::ColorOutOfRange, "D" + std::to_string(order) + " is uncolored" + where);
      }
      continue;
    }
    const int limit = height == 0 ? scheme.alpha[s.drop] : scheme.beta[s.drop];
    if (s.color < 1 || s.color > limit) {
      throw Error(Errc::ColorOutOfRange, "color " + std::to_string(s.color) + " outside [1," +
                                             std::to_string(limit) + "]" + where);
    }
  }
  MotzkinPath path;
  path.scheme_ = scheme;
  path.steps_ = std::move(steps);
  path.height_ = height;
  return path;
}

std::vector<int> MotzkinPath::profile() const {
  std::vector<int> heights{0};
  heights.reserve(steps_.size() + 1);
  for (const Step& s : steps_) heights.push_back(heights.back() + s.delta());
  return heights;
}

// ---------------------------------------------------------------------------
// Dyck paths

DyckPath make_dyck(std::vector<bool> ups, int k, int a) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  if (a < 0 || a > k - 1) {
    throw Error(Errc::BadParams, "depth a must lie in [0, k-1], got " + std::to_string(a));
  }
  int height = 0;
  for (std::size_t pos = 0; pos < ups.size(); ++pos) {
    height += ups[pos] ? 1 : 1 - k;
    if (height < -a) {
      throw Error(Errc::DepthViolation,
                  "path dips below " + std::to_string(-a) + " at step " + std::to_string(pos));
    }
  }
  if (ups.size() % static_cast<std::size_t>(k) != 0 || height % k != 0) {
    throw Error(Errc::NotSemialigned, "length and final height must be multiples of k");
  }
  DyckPath path;
  path.k_ = k;
  path.depth_ = a;
  path.ups_ = std::move(ups);
  path.final_height_ = height;
  return path;
}

DyckPath validate_dyck(std::span<const Step> steps, int k, int a) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  std::vector<bool> ups;
  ups.reserve(steps.size());
  for (const Step& s : steps) {
    if (!s.is_up() && s.drop != k - 1) {
      throw Error(Errc::BadDropIndex, "k-Dyck paths only use D" + std::to_string(k - 1));
    }
    ups.push_back(s.is_up());
  }
  return make_dyck(std::move(ups), k, a);
}

std::vector<int> DyckPath::profile() const {
  std::vector<int> heights{0};
  heights.reserve(ups_.size() + 1);
  for (bool up : ups_) heights.push_back(heights.back() + (up ? 1 : 1 - k_));
  return heights;
}

StepList DyckPath::steps() const {
  StepList out;
  out.reserve(ups_.size());
  for (bool up : ups_) out.push_back(up ? Step::up() : Step::down(k_ - 1));
  return out;
}

std::string DyckPath::text_key() const {
  std::string key;
  key.reserve(ups_.size());
  for (bool up : ups_) key += up ? '0' : '1';
  return key;
}

std::vector<int> peaks_of(const DyckPath& path) {
  std::vector<int> peaks;
  const auto& ups = path.ups();
  int height = 0;
  for (std::size_t i = 0; i < ups.size(); ++i) {
    height += ups[i] ? 1 : 1 - path.k();
    if (ups[i] && i + 1 < ups.size() && !ups[i + 1]) peaks.push_back(height);
  }
  return peaks;
}

PeakParity peak_parity_of(const DyckPath& path) {
  if (path.length() == 0) throw Error(Errc::EmptyPath, "peak parity needs n > 0");
  const auto peaks = peaks_of(path);
  if (peaks.empty()) return PeakParity{PeakParity::Kind::Any, 0};
  const int k = path.k();
  auto residue = [k](int h) { return ((h % k) + k) % k; };
  const int first = residue(peaks.front());
  for (int h : peaks) {
    if (residue(h) != first) return PeakParity{PeakParity::Kind::Mixed, 0};
  }
  return PeakParity{PeakParity::Kind::Uniform, first};
}

bool has_forbidden_hill(const DyckPath& path, int r) {
  const int k = path.k();
  if (r < 1 || r > k - 1) throw Error(Errc::BadParams, "r must lie in [1, k-1]");
  const auto& ups = path.ups();
  const auto heights = path.profile();
  for (std::size_t end = static_cast<std::size_t>(r) + 1; end <= ups.size(); ++end) {
    // window ups[end-r-1 .. end-1] must read U^r D and finish at height 0
    if (ups[end - 1] || heights[end] != 0) continue;
    bool run = true;
    for (std::size_t j = end - 1 - static_cast<std::size_t>(r); j < end - 1; ++j) {
      run = run && ups[j];
    }
    if (run) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// trees

int TreeNode::edge_count() const {
  int total = 0;
  for (const auto& child : children) total += 1 + child.edge_count();
  return total;
}

namespace {

void check_arity(const TreeNode& node, int k) {
  if (static_cast<int>(node.children.size()) > k) {
    throw Error(Errc::BadParams, "vertex with " + std::to_string(node.children.size()) +
                                     " children in a " + std::to_string(k) + "-ary tree");
  }
  for (const auto& child : node.children) check_arity(child, k);
}

void collect_counts(const TreeNode& node, std::vector<int>& out) {
  out.push_back(static_cast<int>(node.children.size()));
  for (const auto& child : node.children) collect_counts(child, out);
}

void render(const TreeNode& node, std::string& out) {
  out += '(';
  for (const auto& child : node.children) render(child, out);
  out += ')';
}

}  // namespace

KaryTree::KaryTree(int k, TreeNode root) : k_(k), root_(std::move(root)) {
  if (k < 2) throw Error(Errc::BadParams, "k must be >= 2");
  check_arity(root_, k_);
}

std::vector<int> KaryTree::child_counts() const {
  std::vector<int> out;
  collect_counts(root_, out);
  return out;
}

std::string KaryTree::to_text() const {
  std::string out;
  render(root_, out);
  return out;
}

KaryTree parse_tree(std::string_view text, int k) {
  std::vector<TreeNode> stack;
  TreeNode root;
  bool done = false;
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t') continue;
    if (done) throw Error(Errc::ParseError, "trailing characters after tree");
    if (c == '(') {
      stack.emplace_back();
    } else if (c == ')') {
      if (stack.empty()) throw Error(Errc::ParseError, "unbalanced ')'");
      TreeNode node = std::move(stack.back());
      stack.pop_back();
      if (stack.empty()) {
        root = std::move(node);
        done = true;
      } else {
        stack.back().children.push_back(std::move(node));
      }
    } else {
      throw Error(Errc::ParseError, std::string("unexpected '") + c + "' in tree");
    }
  }
  if (!done) throw Error(Errc::ParseError, "tree text is empty or unbalanced");
  return KaryTree(k, std::move(root));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json steps_json(std::span<const Step> steps) {
  auto arr = nlohmann::json::array();
  for (const Step& s : steps) {
    nlohmann::json j;
    j["kind"] = s.is_up() ? "U" : "D";
    if (!s.is_up()) j["drop"] = s.drop;
    if (s.color != 0) j["color"] = s.color;
    arr.push_back(std::move(j));
  }
  return arr;
}

StepList steps_from_json(const nlohmann::json& arr) {
  StepList steps;
  for (const auto& j : arr) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "U") {
      steps.push_back(Step::up());
    } else if (kind == "D") {
      steps.push_back(Step::down(j.at("drop").get<int>(), j.value("color", 0)));
    } else {
      throw Error(Errc::ParseError, "unknown step kind '" + kind + "'");
    }
  }
  return steps;
}

nlohmann::json node_json(const TreeNode& node) {
  auto children = nlohmann::json::array();
  for (const auto& child : node.children) children.push_back(node_json(child));
  return nlohmann::json{{"children", std::move(children)}};
}

TreeNode node_from_json(const nlohmann::json& j) {
  TreeNode node;
  for (const auto& child : j.at("children")) node.children.push_back(node_from_json(child));
  return node;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

nlohmann::json to_json(const ColorScheme& scheme) {
  return {{"order", scheme.order}, {"alpha", scheme.alpha}, {"beta", scheme.beta}};
}

ColorScheme scheme_from_json(const nlohmann::json& j) {
  return guarded([&] {
    ColorScheme s(j.at("alpha").get<std::vector<int>>(), j.at("beta").get<std::vector<int>>());
    if (j.contains("order") && j.at("order").get<int>() != s.order) {
      throw Error(Errc::InvalidScheme, "order disagrees with tuple length");
    }
    return s;
  });
}

nlohmann::json to_json(const MotzkinPath& path) {
  return {{"scheme", to_json(path.scheme())}, {"steps", steps_json(path.steps())}};
}

MotzkinPath motzkin_from_json(const nlohmann::json& j) {
  return guarded([&] {
    return validate_motzkin(steps_from_json(j.at("steps")), scheme_from_json(j.at("scheme")));
  });
}

nlohmann::json to_json(const DyckPath& path) {
  return {{"k", path.k()}, {"a", path.depth()}, {"steps", steps_json(path.steps())}};
}

DyckPath dyck_from_json(const nlohmann::json& j) {
  return guarded([&] {
    return validate_dyck(steps_from_json(j.at("steps")), j.at("k").get<int>(),
                         j.value("a", 0));
  });
}

nlohmann::json to_json(const KaryTree& tree) {
  return {{"k", tree.k()}, {"root", node_json(tree.root())}};
}

KaryTree tree_from_json(const nlohmann::json& j) {
  return guarded([&] { return KaryTree(j.at("k").get<int>(), node_from_json(j.at("root"))); });
}

}  // namespace motzkin
