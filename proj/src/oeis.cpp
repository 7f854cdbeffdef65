#include "motzkin/oeis.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include <httplib.h>

#include "motzkin/closedform.hpp"
#include "motzkin/error.hpp"
#include "motzkin/riordan.hpp"

namespace motzkin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t window_key(const Sequence& window, std::size_t offset) {
  return std::hash<std::string>{}(format_sequence(window) + "@" + std::to_string(offset));
}

}  // namespace

bool valid_oeis_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void SequenceDb::add(SequenceRecord record) {
  if (!valid_oeis_id(record.id)) throw Error(Errc::ParseError, "invalid id '" + record.id + "'");
  if (record.terms.empty()) throw Error(Errc::ParseError, record.id + " has no terms");
  if (auto it = records_.find(record.id); it != records_.end()) {
    unindex(it->second);
    records_.erase(it);
  }
  index(record);
  records_.emplace(record.id, std::move(record));
}

const SequenceRecord* SequenceDb::find(std::string_view id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

void SequenceDb::index(const SequenceRecord& record) {
  const auto& t = record.terms;
  for (std::size_t o = 0; o <= kIndexedShift && o + kWindow <= t.size(); ++o) {
    Sequence w(t.begin() + static_cast<std::ptrdiff_t>(o),
               t.begin() + static_cast<std::ptrdiff_t>(o + kWindow));
    windows_.emplace(window_key(w, o), record.id);
  }
}

void SequenceDb::unindex(const SequenceRecord& record) {
  for (auto it = windows_.begin(); it != windows_.end();) {
    it = it->second == record.id ? windows_.erase(it) : std::next(it);
  }
}

std::vector<std::string> SequenceDb::lookup_window(const Sequence& window, std::size_t offset) const {
  if (window.size() != kWindow || offset > kIndexedShift) {
    throw Error(Errc::BadParams, "window lookups use 3 terms at offsets <= 8");
  }
  std::vector<std::string> out;
  auto [lo, hi] = windows_.equal_range(window_key(window, offset));
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SequenceDb load_stripped(std::istream& in) {
  SequenceDb db;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto space = text.find_first_of(" ,");
    const std::string id(text.substr(0, space));
    try {
      if (space == std::string_view::npos) throw Error(Errc::ParseError, "missing terms");
      std::string_view rest = trim(text.substr(space));
      if (rest.empty() || rest.front() != ',') throw Error(Errc::ParseError, "terms must start with ','");
      rest.remove_prefix(1);
      db.add(SequenceRecord{id, parse_sequence(rest)});
    } catch (const Error& e) {
      throw Error(Errc::ParseError, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return db;
}

SequenceDb load_stripped_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return load_stripped(in);
}

SequenceRecord load_bfile(std::istream& in, std::string id) {
  SequenceRecord record{std::move(id), {}};
  std::string line;
  int number = 0;
  std::optional<BigInt> last_index;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto gap = text.find_first_of(" \t");
    try {
      if (gap == std::string_view::npos) throw Error(Errc::ParseError, "expected 'n a(n)'");
      const BigInt index = parse_bigint(text.substr(0, gap));
      if (last_index && index != *last_index + 1) throw Error(Errc::ParseError, "indices must be consecutive");
      last_index = index;
      record.terms.push_back(parse_bigint(text.substr(gap)));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (record.terms.empty()) throw Error(Errc::ParseError, "b-file has no terms");
  return record;
}

const Match* MatchReport::find(std::string_view id) const {
  auto it = std::ranges::find(matches, id, &Match::id);
  return it == matches.end() ? nullptr : &*it;
}

MatchReport match_sequence(const Sequence& terms, const SequenceDb& db, int min_len, int max_shift) {
  if (min_len < 1 || max_shift < 0) throw Error(Errc::BadParams, "need min_len >= 1, max_shift >= 0");
  if (static_cast<int>(terms.size()) < min_len) {
    throw Error(Errc::TooShort, "query has " + std::to_string(terms.size()) + " terms, need " +
                                    std::to_string(min_len));
  }
  MatchReport report{terms, {}};
  const auto query_len = terms.size();
  for (int o = 0; o <= max_shift; ++o) {
    const auto offset = static_cast<std::size_t>(o);
    std::vector<const SequenceRecord*> candidates;
    if (offset <= SequenceDb::kIndexedShift && query_len >= SequenceDb::kWindow) {
      const Sequence head(terms.begin(), terms.begin() + SequenceDb::kWindow);
      for (const auto& id : db.lookup_window(head, offset)) candidates.push_back(db.find(id));
    } else {
      for (const auto& [id, rec] : db.records()) candidates.push_back(&rec);
    }
    for (const SequenceRecord* rec : candidates) {
      if (rec->terms.size() <= offset) continue;
      const std::size_t overlap = std::min(query_len, rec->terms.size() - offset);
      if (static_cast<int>(overlap) < min_len) continue;
      if (!std::equal(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(overlap),
                      rec->terms.begin() + static_cast<std::ptrdiff_t>(offset))) {
        continue;
      }
      report.matches.push_back(
          Match{rec->id, o == 0 ? MatchKind::Exact : MatchKind::Shifted, o, static_cast<int>(overlap)});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// tables

namespace {

std::string label(std::string_view name, const std::vector<int>& v) {
  std::string out(name);
  out += '=';
  if (v.size() == 1) return out + std::to_string(v[0]);
  out += '(';
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ')';
}

TableBlock order_one_block(ScanMode mode, const std::vector<std::vector<std::string>>& expected) {
  TableBlock block;
  for (int b = 0; b <= 5; ++b) block.col_labels.push_back(label("beta", {b}));
  for (int a = 0; a <= 5; ++a) {
    block.row_labels.push_back(label("alpha", {a}));
    auto& row = block.cells.emplace_back();
    for (int b = 0; b <= 5; ++b) {
      row.push_back(CellSpec{ColorScheme({a}, {b}), mode,
                             expected[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]});
    }
  }
  return block;
}

TableBlock order_two_block(const std::vector<std::vector<int>>& alphas,
                           const std::vector<std::vector<int>>& betas,
                           const std::vector<std::vector<std::string>>& expected) {
  TableBlock block;
  for (const auto& b : betas) block.col_labels.push_back(label("beta", b));
  for (std::size_t r = 0; r < alphas.size(); ++r) {
    block.row_labels.push_back(label("alpha", alphas[r]));
    auto& row = block.cells.emplace_back();
    for (std::size_t c = 0; c < betas.size(); ++c) {
      row.push_back(CellSpec{ColorScheme(alphas[r], betas[c]), ScanMode::Column0, expected[r][c]});
    }
  }
  return block;
}

}  // namespace

std::vector<std::string> builtin_table_names() { return {"table5", "table6", "table7", "table8"}; }

TableSpec builtin_table(std::string_view name) {
  if (name == "table5") {
    return {"table5", "Order 1, column 0 (alpha down, beta across)",
            {order_one_block(ScanMode::Column0,
                             {{"A126120", "A005043", "A000957", "A1177641", "A185132", "-"},
                              {"A001405", "A001006", "A000108", "A033321", "-", "-"},
                              {"A054341", "A005773", "A000108*", "A007317", "A033543", "-"},
                              {"A126931", "A059738", "A001700", "A002212", "A064613", "-"},
                              {"-", "-", "A049027", "A026378", "A005572", "A104455"},
                              {"-", "-", "A076025", "-", "A005573", "A182401"}})}};
  }
  if (name == "table6") {
    return {"table6", "Order 1, row sums (alpha down, beta across)",
            {order_one_block(ScanMode::RowSums,
                             {{"C(n,floor(n/2))", "A002426", "A026641", "A126952", "-", "-"},
                              {"A000079", "A005773", "A000984", "A126568", "A227081", "-"},
                              {"A127358", "A000244", "C(2n+1,n+1)", "A026375", "A133158", "-"},
                              {"A127359", "A126932", "A000302", "A026378", "A081671", "-"},
                              {"A127360", "-", "A141223", "-", "A005573", "A098409"},
                              {"-", "-", "-", "-", "A000400", "A122898"}})}};
  }
  if (name == "table7") {
    TableBlock left = order_two_block({{0, 0}, {1, 0}, {2, 0}}, {{0, 0}, {1, 0}, {2, 0}},
                                      {{"-", "-", "-"}, {"A076227", "A071879", "-"}, {"-", "-", "-"}});
    TableBlock right = order_two_block({{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 1}, {2, 1}},
                                       {{"A001005", "-", "A303730"},
                                        {"-", "A036765", "A049128"},
                                        {"-", "A159772", "-"}});
    return {"table7", "Order 2, column 0, second coordinates 0 (left) and 1 (right)",
            {std::move(left), std::move(right)}};
  }
  if (name == "table8") {
    const std::vector<std::vector<std::string>> expected = {
        {"-", "A089354", "A023053", "-", "-"},
        {"-", "-", "A001764", "A121545", "-"},
        {"-", "-", "A098746", "A006013", "-"},
        {"-", "-", "-", "A001764*", "-"},
        {"-", "-", "-", "A047099", "-"}};
    TableBlock block;
    block.corner = "beta=(3,3)";
    for (int a1 = 0; a1 <= 4; ++a1) block.col_labels.push_back("alpha1=" + std::to_string(a1));
    for (int a0 = 0; a0 <= 4; ++a0) {
      block.row_labels.push_back("alpha0=" + std::to_string(a0));
      auto& row = block.cells.emplace_back();
      for (int a1 = 0; a1 <= 4; ++a1) {
        row.push_back(CellSpec{ColorScheme({a0, a1}, {3, 3}), ScanMode::Column0,
                               expected[static_cast<std::size_t>(a0)][static_cast<std::size_t>(a1)]});
      }
    }
    return {"table8", "Order 2, column 0 with beta=(3,3)", {std::move(block)}};
  }
  throw Error(Errc::BadParams, "unknown table '" + std::string(name) + "'");
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Match: return "MATCH";
    case CellStatus::AbsentFromFixture: return "ABSENT_FROM_FIXTURE";
    case CellStatus::Contradiction: return "CONTRADICTION";
    case CellStatus::Malformed: return "MALFORMED";
    case CellStatus::Formula: return "FORMULA";
    case CellStatus::Dash: return "DASH";
    case CellStatus::UnlistedMatch: return "UNLISTED_MATCH";
  }
  return "?";
}

std::optional<Sequence> evaluate_formula(std::string_view formula, int count) {
  Sequence out;
  for (long n = 0; n < count; ++n) {
    if (formula == "C(n,floor(n/2))") {
      out.push_back(binomial(n, n / 2));
    } else if (formula == "C(2n+1,n+1)") {
      out.push_back(binomial(2 * n + 1, n + 1));
    } else {
      return std::nullopt;
    }
  }
  return out;
}

CellResult scan_cell(const CellSpec& spec, const SequenceDb& db, int terms) {
  CellResult result{spec, {}, {}, CellStatus::Dash};
  const Triangle t = motzkin_triangle(spec.scheme, terms);
  result.terms = spec.mode == ScanMode::Column0 ? t.column(0) : row_sums(t);
  result.report = match_sequence(result.terms, db, terms);

  std::string id = spec.expected;
  if (!id.empty() && id.back() == '*') id.pop_back();
  if (id == "-") {
    result.status = result.report.empty() ? CellStatus::Dash : CellStatus::UnlistedMatch;
  } else if (id.empty() || id.front() != 'A') {
    const auto expected = evaluate_formula(id, terms);
    result.status = expected && *expected != result.terms ? CellStatus::Contradiction : CellStatus::Formula;
  } else if (!valid_oeis_id(id)) {
    result.status = CellStatus::Malformed;
  } else if (db.find(id) == nullptr) {
    result.status = CellStatus::AbsentFromFixture;
  } else {
    result.status = result.report.find(id) ? CellStatus::Match : CellStatus::Contradiction;
  }
  return result;
}

TableResult scan_table(const TableSpec& spec, const SequenceDb& db, int terms) {
  TableResult result{spec, {}};
  for (const auto& block : spec.blocks) {
    auto& rows = result.blocks.emplace_back();
    for (const auto& row : block.cells) {
      auto& out = rows.emplace_back();
      for (const auto& cell : row) out.push_back(scan_cell(cell, db, terms));
    }
  }
  return result;
}

std::size_t TableResult::count(CellStatus status) const {
  std::size_t n = 0;
  for (const auto& block : blocks) {
    for (const auto& row : block) n += std::ranges::count(row, status, &CellResult::status);
  }
  return n;
}

namespace {

std::string match_text(const MatchReport& report) {
  std::string out;
  for (const auto& m : report.matches) {
    if (!out.empty()) out += ' ';
    out += m.id;
    if (m.offset > 0) out += "(+" + std::to_string(m.offset) + ")";
  }
  return out;
}

std::string cell_text(const CellResult& cell) {
  if (!cell.report.empty()) return match_text(cell.report);
  switch (cell.status) {
    case CellStatus::AbsentFromFixture: return "(" + cell.spec.expected + ")";
    case CellStatus::Malformed: return cell.spec.expected + "!";
    default: return "-";
  }
}

}  // namespace

std::string render_markdown(const TableResult& result) {
  std::ostringstream os;
  os << "### " << result.spec.name << ": " << result.spec.title << "\n\n";
  std::vector<std::string> notes;
  for (std::size_t b = 0; b < result.blocks.size(); ++b) {
    const TableBlock& block = result.spec.blocks[b];
    os << "| " << block.corner << " |";
    for (const auto& c : block.col_labels) os << ' ' << c << " |";
    os << "\n|---|";
    for (std::size_t c = 0; c < block.col_labels.size(); ++c) os << "---|";
    os << '\n';
    for (std::size_t r = 0; r < block.row_labels.size(); ++r) {
      os << "| " << block.row_labels[r] << " |";
      for (std::size_t c = 0; c < block.col_labels.size(); ++c) {
        const CellResult& cell = result.blocks[b][r][c];
        os << ' ' << cell_text(cell) << " |";
        if (cell.status != CellStatus::Match && cell.status != CellStatus::Dash) {
          notes.push_back(block.row_labels[r] + ", " + block.col_labels[c] + ": printed '" +
                          cell.spec.expected + "', " + to_string(cell.status) +
                          ", terms " + format_sequence(cell.terms));
        }
      }
      os << '\n';
    }
    os << '\n';
  }
  if (!notes.empty()) {
    os << "Notes:\n";
    for (const auto& n : notes) os << "- " << n << '\n';
  }
  return os.str();
}

std::string render_csv(const TableResult& result) {
  std::ostringstream os;
  os << "table,block,row,col,scheme,mode,printed,status,matches,terms\n";
  for (std::size_t b = 0; b < result.blocks.size(); ++b) {
    const TableBlock& block = result.spec.blocks[b];
    for (std::size_t r = 0; r < block.row_labels.size(); ++r) {
      for (std::size_t c = 0; c < block.col_labels.size(); ++c) {
        const CellResult& cell = result.blocks[b][r][c];
        os << result.spec.name << ',' << b << ",\"" << block.row_labels[r] << "\",\""
           << block.col_labels[c] << "\",\"" << to_string(cell.spec.scheme) << "\","
           << (cell.spec.mode == ScanMode::Column0 ? "column0" : "rowsums") << ",\""
           << cell.spec.expected << "\"," << to_string(cell.status) << ",\""
           << match_text(cell.report) << "\",\"" << format_sequence(cell.terms) << "\"\n";
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// network

SequenceRecord fetch_bfile(const std::string& id, const std::string& base_url,
                           const std::filesystem::path& cache_dir) {
  if (!valid_oeis_id(id)) throw Error(Errc::BadParams, "invalid id '" + id + "'");
  const std::string file = "b" + id.substr(1) + ".txt";
  const auto cached = cache_dir / file;
  if (std::filesystem::exists(cached)) {
    std::ifstream in(cached);
    if (!in) throw Error(Errc::IoError, "cannot read " + cached.string());
    return load_bfile(in, id);
  }
  httplib::Client client(base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get("/" + id + "/" + file);
  if (!res) {
    throw Error(Errc::IoError, "GET " + base_url + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(Errc::IoError, "GET /" + id + "/" + file + " returned " + std::to_string(res->status));
  }
  std::istringstream body(res->body);
  SequenceRecord record = load_bfile(body, id);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::ofstream out(cached);
  if (!out) throw Error(Errc::IoError, "cannot write " + cached.string());
  out << res->body;
  return record;
}

}  // namespace motzkin
