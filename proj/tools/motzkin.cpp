// Command-line front end: triangle, count, bijection and oeis subcommands.
//
// Exit codes: 0 success, 2 bad flags / unreadable input / missing database,
// 3 a cross-check or round-trip failed.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzkin/bijections.hpp"
#include "motzkin/closedform.hpp"
#include "motzkin/error.hpp"
#include "motzkin/oeis.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/riordan.hpp"

using namespace motzkin;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

// Thrown for flag combinations CLI11 cannot see on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- triangle ------------------------------------------------------------------

struct TriangleOpts {
  int order = 1;
  std::vector<int> alpha, beta;
  int rows = 8;
  std::string source = "az";
  bool verify = false;
  std::string format = "text";
  bool unsafe = false;
};

constexpr int kAlgebraRowCap = 64;
constexpr int kOracleRowCap = 10;

Triangle oracle_triangle(const ColorScheme& s, int rows) {
  Triangle t;
  t.source = Source::Oracle;
  for (int n = 0; n < rows; ++n) {
    auto& row = t.rows.emplace_back();
    const auto counts = oracle::count_motzkin_by_height(n, s);
    for (int m = 0; m <= n; ++m) row.emplace_back(counts[static_cast<std::size_t>(m)]);
  }
  return t;
}

Triangle build_triangle(const ColorScheme& s, int rows, const std::string& source) {
  if (source == "az") return motzkin_triangle(s, rows);
  if (source == "dh") {
    Triangle t = triangle_from_dh(dh_from_az(motzkin_az(s), static_cast<std::size_t>(rows)), rows);
    t.source = Source::DH;
    return t;
  }
  return oracle_triangle(s, rows);
}

ColorScheme scheme_flags(int order, const std::vector<int>& alpha, const std::vector<int>& beta) {
  if (static_cast<int>(alpha.size()) != order || static_cast<int>(beta.size()) != order) {
    throw UsageError("--alpha and --beta need exactly --order entries");
  }
  return ColorScheme(alpha, beta);
}

int run_triangle(const TriangleOpts& o) {
  const ColorScheme scheme = scheme_flags(o.order, o.alpha, o.beta);
  const int cap = o.source == "oracle" ? kOracleRowCap : kAlgebraRowCap;
  if (!o.unsafe && o.rows > cap) {
    throw UsageError("--rows " + std::to_string(o.rows) + " exceeds the cap of " + std::to_string(cap) +
                     " for --source " + o.source + " (use --unsafe)");
  }
  const Triangle t = build_triangle(scheme, o.rows, o.source);

  std::vector<std::pair<std::string, bool>> checks;
  if (o.verify) {
    for (const std::string other : {"az", "dh", "oracle"}) {
      if (other == o.source) continue;
      if (other == "oracle" && !o.unsafe && o.rows > kOracleRowCap) continue;
      checks.emplace_back(other, build_triangle(scheme, o.rows, other).same_entries(t));
    }
  }

  if (o.format == "json") {
    json j = triangle_to_json(t);
    j["scheme"] = to_json(scheme);
    if (o.verify) {
      json v = json::object();
      for (const auto& [name, ok] : checks) v[name] = ok;
      j["verified"] = v;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (o.format == "csv" ? triangle_to_csv(t) : triangle_to_text(t));
  }
  bool all_ok = true;
  for (const auto& [name, ok] : checks) {
    std::cerr << "verify " << o.source << " vs " << name << ": " << (ok ? "OK" : "MISMATCH") << '\n';
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : kExitMismatch;
}

// --- count ---------------------------------------------------------------------

struct CountOpts {
  std::string family;
  int k = 2, a = 0, r = 1, i = 0, n = 0, m = 0;
  std::vector<int> subset;
  bool has_subset = false;
  std::vector<std::string> checks;
  std::string format = "text";
  bool unsafe = false;
};

constexpr int kOracleCountCap = 10;

std::optional<BigInt> count_riordan(const CountOpts& o) {
  const int rows = o.n + 1;
  if (o.family == "dyck") return dyck_triangle(o.k, o.a, rows).at(o.n, o.m);
  if (o.family == "fine") return fine_triangle(o.k, o.a, o.r, rows).at(o.n, o.m);
  if (o.family == "tree") {
    const auto children = o.has_subset ? oracle::ChildSet::from_subset(o.k, o.subset) : oracle::ChildSet::all(o.k);
    return motzkin_triangle(children.scheme(), rows).at(o.n, 0);
  }
  // peak parity: 0 through the colored scheme, k-1 (depth 0, height 0) via the
  // top-peak decomposition, nothing else.
  if (o.i == 0) return motzkin_triangle(peak0_scheme(o.k, o.a), rows).at(o.n, o.m);
  if (o.i == o.k - 1 && o.a == 0 && o.m == 0) {
    return motzkin_triangle(ColorScheme::uniform(o.k - 1, 1), o.n).at(o.n - 1, 0);
  }
  return std::nullopt;
}

std::optional<BigInt> count_closedform(const CountOpts& o) {
  if (o.family == "dyck" && o.m == 0) return prodinger_count(o.k, o.a, o.n);
  if (o.family == "fine" && o.a == 0 && o.m == 0) {
    return fine_series(o.k, o.r, static_cast<std::size_t>(o.n))[static_cast<std::size_t>(o.n)];
  }
  return std::nullopt;
}

BigInt count_oracle(const CountOpts& o) {
  if (!o.unsafe && o.n > kOracleCountCap) {
    throw UsageError("oracle count capped at --n " + std::to_string(kOracleCountCap) + " (use --unsafe)");
  }
  if (o.family == "dyck") return oracle::enumerate_dyck(o.k, o.a, o.n, o.m).size();
  if (o.family == "fine") return oracle::enumerate_fine(o.k, o.a, o.r, o.n, o.m).size();
  if (o.family == "peak") return oracle::enumerate_peak_parity(o.k, o.a, o.i, o.n, o.m).size();
  const auto children = o.has_subset ? oracle::ChildSet::from_subset(o.k, o.subset) : oracle::ChildSet::all(o.k);
  return oracle::enumerate_trees(o.k, o.n, children).size();
}

int run_count(const CountOpts& o) {
  if (o.n < 0 || o.m < 0) throw UsageError("--n and --m must be non-negative");
  if (o.family == "tree" && o.m != 0) throw UsageError("--m does not apply to trees");
  if (o.family == "peak" && o.n == 0) throw Error(Errc::EmptyLength, "peak parity needs --n >= 1");
  if (o.m > o.n) {
    std::cout << "0\n";
    return 0;
  }

  std::optional<BigInt> value = count_riordan(o);
  std::string primary = "riordan";
  if (!value) {
    value = count_oracle(o);
    primary = "oracle";
  }

  json results = json::object();
  bool all_ok = true;
  for (const auto& check : o.checks) {
    std::optional<BigInt> other;
    if (check == "riordan") other = count_riordan(o);
    if (check == "closedform") other = count_closedform(o);
    if (check == "oracle") other = count_oracle(o);
    if (!other) throw UsageError("no " + check + " count for this family and parameters");
    const bool ok = *other == *value;
    all_ok = all_ok && ok;
    results[check] = {{"value", to_string(*other)}, {"ok", ok}};
  }

  if (o.format == "json") {
    json j = {{"family", o.family}, {"n", o.n}, {"count", to_string(*value)}, {"source", primary}};
    if (!o.checks.empty()) j["checks"] = results;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(*value) << '\n';
    for (const auto& [name, r] : results.items()) {
      std::cerr << "check " << name << ": " << r["value"].get<std::string>() << (r["ok"].get<bool>() ? " OK" : " MISMATCH")
                << '\n';
    }
  }
  return all_ok ? 0 : kExitMismatch;
}

// --- bijection -------------------------------------------------------------------

struct BijectionOpts {
  std::string name;
  std::string direction = "fwd";
  std::string input;
  bool verify_all = false;
  int n = 0;
  int k = 2, a = 0;
  std::optional<int> r;
  int order = 1;
  std::vector<int> alpha;
};

std::string read_input(const std::string& where) {
  std::ostringstream ss;
  if (where.empty() || where == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(where);
    if (!in) throw Error(Errc::IoError, "cannot open " + where);
    ss << in.rdbuf();
  }
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  return s;
}

bool looks_like_json(const std::string& s) { return !s.empty() && s.front() == '{'; }

MotzkinPath read_motzkin(const std::string& text, const ColorScheme& scheme) {
  if (looks_like_json(text)) {
    MotzkinPath p = motzkin_from_json(json::parse(text));
    if (!(p.scheme() == scheme)) throw Error(Errc::SchemeMismatch, "input scheme is " + to_string(p.scheme()));
    return p;
  }
  return validate_motzkin(parse_steps(text), scheme);
}

// Accepts "UUDD", "U U D1 D1" or JSON.
DyckPath read_dyck(const std::string& text, int k, int a) {
  if (looks_like_json(text)) return dyck_from_json(json::parse(text));
  if (text.find_first_not_of("UD") == std::string::npos) {
    std::vector<bool> ups;
    for (char c : text) ups.push_back(c == 'U');
    return make_dyck(ups, k, a);
  }
  return validate_dyck(parse_steps(text), k, a);
}

KaryTree read_tree(const std::string& text, int k) {
  if (looks_like_json(text)) return tree_from_json(json::parse(text));
  return parse_tree(text, k);
}

std::string ud_text(const DyckPath& p) {
  std::string out;
  for (bool u : p.ups()) out += u ? 'U' : 'D';
  return out;
}

json describe(const MotzkinPath& p) {
  json j = to_json(p);
  j["text"] = p.to_text();
  return j;
}
json describe(const DyckPath& p) {
  json j = to_json(p);
  j["text"] = ud_text(p);
  return j;
}
json describe(const KaryTree& t) {
  json j = to_json(t);
  j["text"] = t.to_text();
  return j;
}

ColorScheme rowsum_scheme(const BijectionOpts& o) {
  // the map needs alpha == beta
  return scheme_flags(o.order, o.alpha, o.alpha);
}

json certificate(const json& in, const json& out, bool ok) {
  return {{"input", in}, {"output", out}, {"inverse_roundtrip", ok}};
}

json run_single(const BijectionOpts& o, const std::string& text) {
  const bool fwd = o.direction == "fwd";
  if (o.name == "rowsum") {
    const ColorScheme s = rowsum_scheme(o);
    if (fwd) {
      const auto p = read_motzkin(text, s);
      const auto q = rowsum_forward(p);
      return certificate(describe(p), describe(q), rowsum_inverse(q) == p);
    }
    const auto q = read_motzkin(text, s.bump_alpha());
    const auto p = rowsum_inverse(q);
    return certificate(describe(q), describe(p), rowsum_forward(p) == q);
  }
  if (o.name == "dyck") {
    if (fwd) {
      const auto p = read_motzkin(text, dyck_scheme(o.k, o.a, o.r));
      const auto q = motzkin_to_dyck(p, o.k, o.a, o.r);
      return certificate(describe(p), describe(q), dyck_to_motzkin(q, o.k, o.a, o.r) == p);
    }
    const auto q = read_dyck(text, o.k, o.a);
    const auto p = dyck_to_motzkin(q, o.k, o.a, o.r);
    return certificate(describe(q), describe(p), motzkin_to_dyck(p, o.k, o.a, o.r) == q);
  }
  if (o.name == "peak0") {
    if (fwd) {
      const auto p = read_motzkin(text, peak0_scheme(o.k, o.a));
      const auto q = peak0_forward(p, o.k, o.a);
      return certificate(describe(p), describe(q), peak0_inverse(q) == p);
    }
    const auto q = read_dyck(text, o.k, o.a);
    const auto p = peak0_inverse(q);
    return certificate(describe(q), describe(p), peak0_forward(p, o.k, o.a) == q);
  }
  // tree
  if (fwd) {
    const auto t = read_tree(text, o.k);
    const auto p = tree_to_motzkin(t);
    return certificate(describe(t), describe(p), motzkin_to_tree(p, o.k) == t);
  }
  const auto p = read_motzkin(text, ColorScheme::uniform(o.k - 1, 1));
  const auto t = motzkin_to_tree(p, o.k);
  return certificate(describe(p), describe(t), tree_to_motzkin(t) == p);
}

// Round trips every domain element of size n and compares the image with the
// independently enumerated codomain.
struct Verification {
  std::size_t total = 0, ok = 0;
  bool image_matches = false;
  std::size_t codomain = 0;
};

template <class In, class Out>
Verification verify_family(const std::vector<In>& domain, const std::vector<Out>& codomain,
                           const std::function<Out(const In&)>& fwd, const std::function<In(const Out&)>& inv) {
  Verification v;
  std::set<Out> image;
  for (const auto& x : domain) {
    ++v.total;
    try {
      const Out y = fwd(x);
      image.insert(y);
      if (inv(y) == x) ++v.ok;
    } catch (const Error&) {
      // counted as a failed round trip
    }
  }
  v.codomain = codomain.size();
  v.image_matches = image == std::set<Out>(codomain.begin(), codomain.end());
  return v;
}

std::vector<MotzkinPath> motzkin_all_m(int n, const ColorScheme& s) { return oracle::enumerate_motzkin_all_heights(n, s); }

std::vector<DyckPath> dyck_all_m(int n, const BijectionOpts& o, bool peak) {
  std::vector<DyckPath> out;
  for (int m = 0; m <= n; ++m) {
    std::vector<DyckPath> part;
    if (peak) {
      part = n == 0 ? oracle::enumerate_dyck(o.k, o.a, 0, 0) : oracle::enumerate_peak_parity(o.k, o.a, 0, n, m);
    } else if (o.r) {
      part = oracle::enumerate_fine(o.k, o.a, *o.r, n, m);
    } else {
      part = oracle::enumerate_dyck(o.k, o.a, n, m);
    }
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int run_verify_all(const BijectionOpts& o) {
  if (o.n < 0 || o.n > kOracleCountCap) throw UsageError("--n must be in [0, 10] for --verify-all");
  Verification v;
  if (o.name == "rowsum") {
    const ColorScheme s = rowsum_scheme(o);
    v = verify_family<MotzkinPath, MotzkinPath>(motzkin_all_m(o.n, s), oracle::enumerate_motzkin(o.n, 0, s.bump_alpha()),
                                                rowsum_forward, rowsum_inverse);
  } else if (o.name == "dyck") {
    const auto k = o.k, a = o.a;
    const auto r = o.r;
    v = verify_family<MotzkinPath, DyckPath>(
        motzkin_all_m(o.n, dyck_scheme(k, a, r)), dyck_all_m(o.n, o, false),
        [&](const MotzkinPath& p) { return motzkin_to_dyck(p, k, a, r); },
        [&](const DyckPath& q) { return dyck_to_motzkin(q, k, a, r); });
  } else if (o.name == "peak0") {
    const auto k = o.k, a = o.a;
    v = verify_family<MotzkinPath, DyckPath>(
        motzkin_all_m(o.n, peak0_scheme(k, a)), dyck_all_m(o.n, o, true),
        [&](const MotzkinPath& p) { return peak0_forward(p, k, a); }, peak0_inverse);
  } else {
    const auto k = o.k;
    v = verify_family<KaryTree, MotzkinPath>(
        oracle::enumerate_trees(k, o.n, oracle::ChildSet::all(k)),
        oracle::enumerate_motzkin(o.n, 0, ColorScheme::uniform(k - 1, 1)), tree_to_motzkin,
        [&](const MotzkinPath& p) { return motzkin_to_tree(p, k); });
  }
  std::cout << v.ok << "/" << v.total << " round-trips " << (v.ok == v.total ? "OK" : "FAILED") << '\n';
  std::cout << "image " << (v.image_matches ? "equals" : "DIFFERS FROM") << " codomain (" << v.codomain
            << " objects)\n";
  return v.ok == v.total && v.image_matches ? 0 : kExitMismatch;
}

int run_bijection(const BijectionOpts& o) {
  if (o.verify_all) return run_verify_all(o);
  const json cert = run_single(o, read_input(o.input));
  std::cout << cert.dump(2) << '\n';
  return cert["inverse_roundtrip"].get<bool>() ? 0 : kExitMismatch;
}

// --- oeis ------------------------------------------------------------------------

struct OeisOpts {
  std::string scan;
  std::string db;
  std::string format = "md";
  int terms = 7;
  bool fetch = false;
  std::string cache = ".oeis-cache";
  int order = 1;
  std::vector<int> alpha, beta;
  std::string mode = "column0";
};

int run_oeis(const OeisOpts& o) {
  std::string db_path = o.db;
  if (db_path.empty()) {
    if (const char* env = std::getenv("OEIS_DB")) db_path = env;
  }
  if (db_path.empty()) throw UsageError("no database: pass --db or set OEIS_DB");
  SequenceDb db;
  try {
    db = load_stripped_file(db_path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  TableSpec spec;
  if (o.scan == "custom") {
    const ColorScheme s = scheme_flags(o.order, o.alpha, o.beta);
    TableBlock block;
    block.row_labels = {"alpha=" + to_string(s)};
    block.col_labels = {o.mode};
    block.cells = {{CellSpec{s, o.mode == "rowsums" ? ScanMode::RowSums : ScanMode::Column0, "-"}}};
    spec = {"custom", "Single scheme", {block}};
  } else {
    spec = builtin_table(o.scan);
  }

  if (o.fetch) {
    std::string base = "http://oeis.org";
    if (const char* env = std::getenv("OEIS_URL")) base = env;
    for (const auto& block : spec.blocks) {
      for (const auto& row : block.cells) {
        for (const auto& cell : row) {
          std::string id = cell.expected;
          if (!id.empty() && id.back() == '*') id.pop_back();
          if (!valid_oeis_id(id) || db.find(id)) continue;
          try {
            db.add(fetch_bfile(id, base, o.cache));
          } catch (const Error& e) {
            std::cerr << "fetch " << id << ": " << e.what() << '\n';
          }
        }
      }
    }
  }

  const TableResult result = scan_table(spec, db, o.terms);
  std::cout << (o.format == "csv" ? render_csv(result) : render_markdown(result));
  return result.count(CellStatus::Contradiction) == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Motzkin path triangles, counts, bijections and OEIS scans"};
  app.require_subcommand(1);

  TriangleOpts tri;
  auto* t = app.add_subcommand("triangle", "Print a colored Motzkin triangle");
  t->add_option("--order", tri.order, "Order l")->check(CLI::PositiveNumber);
  t->add_option("--alpha", tri.alpha, "alpha_0,...,alpha_{l-1}")->delimiter(',')->required();
  t->add_option("--beta", tri.beta, "beta_0,...,beta_{l-1}")->delimiter(',')->required();
  t->add_option("--rows", tri.rows, "Number of rows")->check(CLI::PositiveNumber);
  t->add_option("--source", tri.source)->check(CLI::IsMember({"az", "dh", "oracle"}));
  t->add_flag("--verify", tri.verify, "Cross-check against the other sources");
  t->add_option("--format", tri.format)->check(CLI::IsMember({"text", "csv", "json"}));
  t->add_flag("--unsafe", tri.unsafe, "Lift the row caps");

  CountOpts cnt;
  auto* c = app.add_subcommand("count", "Count a path or tree family");
  c->add_option("--family", cnt.family)->required()->check(CLI::IsMember({"dyck", "fine", "peak", "tree"}));
  c->add_option("--k", cnt.k)->check(CLI::Range(2, 64));
  c->add_option("--a", cnt.a)->check(CLI::NonNegativeNumber);
  c->add_option("--r", cnt.r);
  c->add_option("--i", cnt.i)->check(CLI::NonNegativeNumber);
  c->add_option("--n", cnt.n)->required();
  c->add_option("--m", cnt.m);
  auto* subset_opt = c->add_option("--S", cnt.subset, "Allowed child counts below k")->delimiter(',');
  c->add_option("--check", cnt.checks)->delimiter(',')->check(CLI::IsMember({"closedform", "riordan", "oracle"}));
  c->add_option("--format", cnt.format)->check(CLI::IsMember({"text", "json"}));
  c->add_flag("--unsafe", cnt.unsafe);

  BijectionOpts bij;
  int bij_r = 0;
  auto* b = app.add_subcommand("bijection", "Apply or exhaustively verify a bijection");
  b->add_option("--name", bij.name)->required()->check(CLI::IsMember({"rowsum", "dyck", "peak0", "tree"}));
  b->add_option("--direction", bij.direction)->check(CLI::IsMember({"fwd", "inv"}));
  b->add_option("--input", bij.input, "File with the input object ('-' or absent: stdin)");
  b->add_flag("--verify-all", bij.verify_all);
  b->add_option("--n", bij.n);
  b->add_option("--k", bij.k)->check(CLI::Range(2, 64));
  b->add_option("--a", bij.a)->check(CLI::NonNegativeNumber);
  auto* r_opt = b->add_option("--r", bij_r, "Fine restriction for --name dyck");
  b->add_option("--order", bij.order)->check(CLI::PositiveNumber);
  b->add_option("--alpha", bij.alpha, "Colors for --name rowsum")->delimiter(',');

  OeisOpts oe;
  auto* s = app.add_subcommand("oeis", "Compare triangle columns with OEIS data");
  s->add_option("--scan", oe.scan)->required()->check(CLI::IsMember({"table5", "table6", "table7", "table8", "custom"}));
  s->add_option("--db", oe.db, "Stripped-format file (default: $OEIS_DB)");
  s->add_option("--format", oe.format)->check(CLI::IsMember({"md", "csv"}));
  s->add_option("--terms", oe.terms)->check(CLI::Range(1, 64));
  s->add_flag("--oeis-fetch", oe.fetch, "Download missing b-files from $OEIS_URL");
  s->add_option("--cache", oe.cache);
  s->add_option("--order", oe.order)->check(CLI::PositiveNumber);
  s->add_option("--alpha", oe.alpha)->delimiter(',');
  s->add_option("--beta", oe.beta)->delimiter(',');
  s->add_option("--mode", oe.mode)->check(CLI::IsMember({"column0", "rowsums"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*t) return run_triangle(tri);
    if (*c) {
      cnt.has_subset = subset_opt->count() > 0;
      return run_count(cnt);
    }
    if (*b) {
      if (r_opt->count() > 0) bij.r = bij_r;
      return run_bijection(bij);
    }
    return run_oeis(oe);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << '\n';
    return kExitUsage;
  }
}
