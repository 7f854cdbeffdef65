#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/paths.hpp"

namespace motzkin {

struct SequenceRecord {
  std::string id;
  Sequence terms;
};

/// True for "A" followed by exactly six digits.
bool valid_oeis_id(std::string_view id);

/// In-memory sequence store, indexed by id and by short leading windows.
class SequenceDb {
 public:
  /// Throws ParseError for a malformed id or empty terms. Re-adding an id
  /// replaces the earlier record.
  void add(SequenceRecord record);

  const SequenceRecord* find(std::string_view id) const;
  std::size_t size() const { return records_.size(); }
  const std::map<std::string, SequenceRecord, std::less<>>& records() const { return records_; }

  /// Ids whose terms at `offset` start with `window` (window length must be
  /// kWindow, offset at most kIndexedShift).
  std::vector<std::string> lookup_window(const Sequence& window, std::size_t offset) const;

  static constexpr std::size_t kWindow = 3;
  static constexpr std::size_t kIndexedShift = 8;

 private:
  void index(const SequenceRecord& record);
  void unindex(const SequenceRecord& record);

  std::map<std::string, SequenceRecord, std::less<>> records_;
  std::unordered_multimap<std::size_t, std::string> windows_;
};

/// Lines "A000108 ,1,1,2,5,14,"; blank lines and lines starting with '#' are
/// skipped. Errors are ParseError with the 1-based line number.
SequenceDb load_stripped(std::istream& in);
/// Throws IoError when the file cannot be opened.
SequenceDb load_stripped_file(const std::filesystem::path& path);

/// b-file lines "n a(n)"; comments start with '#'. Indices must be consecutive.
SequenceRecord load_bfile(std::istream& in, std::string id);

enum class MatchKind { Exact, Shifted };

struct Match {
  std::string id;
  MatchKind kind = MatchKind::Exact;
  int offset = 0;  // stored terms dropped before the query lines up
  int length = 0;  // number of compared terms
};

struct MatchReport {
  Sequence query;
  std::vector<Match> matches;

  bool empty() const { return matches.empty(); }
  const Match* find(std::string_view id) const;
};

/// Every id whose terms, after dropping o <= max_shift leading entries, agree
/// with the query on at least min_len positions and on every position both
/// sides have. Throws TooShort when the query has fewer than min_len terms.
MatchReport match_sequence(const Sequence& terms, const SequenceDb& db, int min_len = 7,
                           int max_shift = 2);

// --- table scans ---------------------------------------------------------------

enum class ScanMode { Column0, RowSums };

/// One grid cell: the scheme, what to compute, and the printed table's entry
/// ("A001006", "A000108*", "-", or a formula).
struct CellSpec {
  ColorScheme scheme;
  ScanMode mode = ScanMode::Column0;
  std::string expected;
};

struct TableBlock {
  std::string corner;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<CellSpec>> cells;  // [row][col]
};

struct TableSpec {
  std::string name;
  std::string title;
  std::vector<TableBlock> blocks;
};

/// table5 / table6 (order 1, alpha, beta in 0..5; column 0 / row sums),
/// table7 (order 2, two 3x3 blocks), table8 (order 2, beta = (3,3)).
TableSpec builtin_table(std::string_view name);
std::vector<std::string> builtin_table_names();

enum class CellStatus {
  Match,              // the printed id is in the fixture and matches
  AbsentFromFixture,  // the printed id is not in the fixture
  Contradiction,      // the fixture disagrees with the printed entry
  Malformed,          // the printed id is not a valid OEIS id
  Formula,            // the printed entry is a formula and the terms satisfy it
  Dash,               // printed "-" and nothing in the fixture matches
  UnlistedMatch,      // printed "-" but some fixture sequence matches
};

std::string to_string(CellStatus status);

struct CellResult {
  CellSpec spec;
  Sequence terms;
  MatchReport report;
  CellStatus status = CellStatus::Dash;
};

struct TableResult {
  TableSpec spec;
  std::vector<std::vector<std::vector<CellResult>>> blocks;  // [block][row][col]

  std::size_t count(CellStatus status) const;
};

/// Computes `terms` rows of each cell's triangle and matches the resulting
/// sequence against the database.
TableResult scan_table(const TableSpec& spec, const SequenceDb& db, int terms = 7);

/// Terms 0..count-1 of a formula entry such as "C(2n+1,n+1)"; nullopt for a
/// formula this module does not know.
std::optional<Sequence> evaluate_formula(std::string_view formula, int count);

/// Evaluates a single cell the same way scan_table does. A known formula that
/// disagrees with the terms counts as a contradiction.
CellResult scan_cell(const CellSpec& spec, const SequenceDb& db, int terms = 7);

std::string render_markdown(const TableResult& result);
std::string render_csv(const TableResult& result);

// --- optional network access ------------------------------------------------

/// Downloads the b-file for `id` from `base_url` (plain http, e.g.
/// "http://oeis.org"), caching the response body under cache_dir. A cached
/// copy is used without contacting the server. Throws IoError on failure.
SequenceRecord fetch_bfile(const std::string& id, const std::string& base_url,
                           const std::filesystem::path& cache_dir);

}  // namespace motzkin
