#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "motzkin/error.hpp"
#include "motzkin/oeis.hpp"
#include "motzkin/riordan.hpp"

using namespace motzkin;
namespace fs = std::filesystem;

namespace {

const SequenceDb& fixture() {
  static const SequenceDb db = load_stripped_file(MOTZKIN_FIXTURE);
  return db;
}

SequenceDb from_text(const std::string& text) {
  std::istringstream in(text);
  return load_stripped(in);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::IoError;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

Sequence prefix(const Sequence& s, std::size_t n) { return Sequence(s.begin(), s.begin() + n); }

}  // namespace

TEST_CASE("ids") {
  CHECK(valid_oeis_id("A000108"));
  CHECK_FALSE(valid_oeis_id("A1177641"));
  CHECK_FALSE(valid_oeis_id("A00010"));
  CHECK_FALSE(valid_oeis_id("B000108"));
  CHECK_FALSE(valid_oeis_id("A00010x"));
}

TEST_CASE("stripped format") {
  const auto db = from_text("A000108 ,1,1,2,5,14,\n");
  REQUIRE(db.size() == 1);
  CHECK(db.find("A000108")->terms == Sequence{1, 1, 2, 5, 14});
  CHECK(from_text("# only a comment\n\n").size() == 0);
  CHECK(from_text("A000001 ,-1,2,\r\nA000002 ,3,\n").find("A000001")->terms == Sequence{-1, 2});
  const std::string msg = message_of([] { from_text("# ok\nA000108 ,1,x,\n"); });
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(code_of([] { from_text("A000108 1,2\n"); }) == Errc::ParseError);
  CHECK(code_of([] { from_text("A10 ,1,\n"); }) == Errc::ParseError);
  CHECK(code_of([] { from_text("A000108 ,\n"); }) == Errc::ParseError);
  CHECK(code_of([] { load_stripped_file("/nonexistent/fixture.txt"); }) == Errc::IoError);
}

TEST_CASE("fixture contents agree with the triangles") {
  const auto& db = fixture();
  CHECK(db.size() >= 35);
  const auto* motz = db.find("A001006");
  REQUIRE(motz != nullptr);
  CHECK(prefix(motz->terms, 8) == Sequence{1, 1, 2, 4, 9, 21, 51, 127});
  CHECK(prefix(motz->terms, 20) == motzkin_triangle(ColorScheme({1}, {1}), 20).column(0));
  CHECK(prefix(db.find("A000108")->terms, 20) == motzkin_triangle(ColorScheme({1}, {2}), 20).column(0));
  CHECK(prefix(db.find("A005043")->terms, 20) == motzkin_triangle(ColorScheme({0}, {1}), 20).column(0));
}

TEST_CASE("b-files") {
  std::istringstream in("# header\n0 1\n1 1\n2 2\n\n3 5\n");
  const auto rec = load_bfile(in, "A000108");
  CHECK(rec.terms == Sequence{1, 1, 2, 5});
  std::istringstream gap("0 1\n2 2\n");
  CHECK(code_of([&] { load_bfile(gap, "A000108"); }) == Errc::ParseError);
  std::istringstream empty("# nothing\n");
  CHECK(code_of([&] { load_bfile(empty, "A000108"); }) == Errc::ParseError);
}

TEST_CASE("matching") {
  const auto& db = fixture();
  const Sequence motz = motzkin_triangle(ColorScheme({1}, {1}), 7).column(0);
  const auto report = match_sequence(motz, db);
  REQUIRE(report.find("A001006") != nullptr);
  CHECK(report.find("A001006")->kind == MatchKind::Exact);
  CHECK(report.find("A001006")->length == 7);

  const auto fine = match_sequence(motzkin_triangle(ColorScheme({0}, {2}), 7).column(0), db);
  REQUIRE(fine.find("A000957") != nullptr);
  CHECK(fine.find("A000957")->kind == MatchKind::Shifted);
  CHECK(fine.find("A000957")->offset == 1);

  CHECK(match_sequence(Sequence(7, 0), db).empty());
  CHECK(code_of([&] { match_sequence(Sequence{1, 1, 2}, db); }) == Errc::TooShort);

  // shift beyond the indexed window range falls back to a full scan
  const auto far = match_sequence(Sequence{512, 1024, 2048, 4096, 8192, 16384, 32768}, db, 7, 10);
  REQUIRE(far.find("A000079") != nullptr);
  CHECK(far.find("A000079")->offset == 9);
}

TEST_CASE("a shifted match is an exact match after dropping terms") {
  const auto& db = fixture();
  for (const auto& s : {ColorScheme({2}, {1}), ColorScheme({2}, {2}), ColorScheme({3}, {3}), ColorScheme({0}, {2})}) {
    const Sequence q = motzkin_triangle(s, 9).column(0);
    for (const auto& m : match_sequence(q, db).matches) {
      const auto& terms = db.find(m.id)->terms;
      const Sequence dropped(terms.begin() + m.offset, terms.end());
      SequenceDb single;
      single.add({m.id, dropped});
      const auto again = match_sequence(q, single, m.length, 0);
      REQUIRE(again.find(m.id) != nullptr);
      CHECK(again.find(m.id)->kind == MatchKind::Exact);
    }
  }
}

TEST_CASE("table cells") {
  const auto& db = fixture();
  const auto t5 = scan_table(builtin_table("table5"), db);
  CHECK(t5.blocks[0][1][1].status == CellStatus::Match);
  CHECK(t5.blocks[0][1][1].report.find("A001006"));
  CHECK(t5.blocks[0][2][3].status == CellStatus::Match);
  CHECK(t5.blocks[0][2][3].report.find("A007317"));
  CHECK(t5.blocks[0][0][3].status == CellStatus::Malformed);
  CHECK(t5.blocks[0][0][4].status == CellStatus::AbsentFromFixture);
  CHECK(t5.blocks[0][2][2].status == CellStatus::Match);  // starred entry, shifted
  CHECK(t5.blocks[0][2][2].report.find("A000108")->offset == 1);

  const auto t6 = scan_table(builtin_table("table6"), db);
  CHECK(t6.blocks[0][1][1].report.find("A005773"));
  CHECK(t6.blocks[0][0][0].status == CellStatus::Formula);
  CHECK(t6.blocks[0][2][2].status == CellStatus::Formula);
  // printed as a dash, but the row sums are 5^n
  CHECK(t6.blocks[0][4][3].status == CellStatus::UnlistedMatch);
  CHECK(t6.blocks[0][4][3].report.find("A000351"));

  const auto t8 = scan_table(builtin_table("table8"), db);
  CHECK(t8.blocks[0][1][2].status == CellStatus::Match);
  CHECK(t8.blocks[0][1][2].report.find("A001764"));
  CHECK(t8.blocks[0][2][2].status == CellStatus::AbsentFromFixture);
  CHECK(t8.blocks[0][2][2].spec.expected == "A098746");

  CHECK(code_of([] { builtin_table("table9"); }) == Errc::BadParams);
}

TEST_CASE("every table is free of contradictions") {
  const auto& db = fixture();
  for (const auto& name : builtin_table_names()) {
    const auto result = scan_table(builtin_table(name), db);
    CAPTURE(name);
    CHECK(result.count(CellStatus::Contradiction) == 0);
  }
}

TEST_CASE("formulas") {
  CHECK(*evaluate_formula("C(n,floor(n/2))", 6) == Sequence{1, 1, 2, 3, 6, 10});
  CHECK(*evaluate_formula("C(2n+1,n+1)", 4) == Sequence{1, 3, 10, 35});
  CHECK_FALSE(evaluate_formula("2^n", 4).has_value());
  CellSpec wrong{ColorScheme({1}, {1}), ScanMode::RowSums, "C(2n+1,n+1)"};
  CHECK(scan_cell(wrong, fixture()).status == CellStatus::Contradiction);
}

TEST_CASE("empty database gives only dashes") {
  const SequenceDb empty;
  const auto r = scan_table(builtin_table("table8"), empty);
  CHECK(r.count(CellStatus::Match) == 0);
  CHECK(r.count(CellStatus::UnlistedMatch) == 0);
  const std::string md = render_markdown(r);
  CHECK(md.find("A001764 ") == std::string::npos);
  CHECK(md.find("(A001764)") != std::string::npos);
}

TEST_CASE("rendering") {
  const auto r = scan_table(builtin_table("table5"), fixture());
  const std::string md = render_markdown(r);
  CHECK(md.find("| alpha=1 | A001405 | A001006 |") != std::string::npos);
  CHECK(md.find("A000957(+1)") != std::string::npos);
  CHECK(md.find("A1177641!") != std::string::npos);
  CHECK(md.find("Notes:") != std::string::npos);
  const std::string csv = render_csv(r);
  CHECK(csv.rfind("table,block,row,col,scheme,mode,printed,status,matches,terms\n", 0) == 0);
  CHECK(csv.find("\"alpha=1\",\"beta=1\",\"(1),(1)\",column0,\"A001006\",MATCH,\"A001006\",\"1,1,2,4,9,21,51\"") !=
        std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 37);
}

TEST_CASE("fetching b-files from a local server") {
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Get("/A000108/b000108.txt", [&](const httplib::Request&, httplib::Response& res) {
    ++hits;
    res.set_content("# Catalan\n0 1\n1 1\n2 2\n3 5\n4 14\n", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const fs::path cache = fs::temp_directory_path() / ("motzkin-cache-" + std::to_string(port));
  fs::remove_all(cache);
  const std::string base = "http://127.0.0.1:" + std::to_string(port);

  const auto rec = fetch_bfile("A000108", base, cache);
  CHECK(rec.terms == Sequence{1, 1, 2, 5, 14});
  CHECK(fs::exists(cache / "b000108.txt"));
  CHECK(fetch_bfile("A000108", base, cache).terms == rec.terms);
  CHECK(hits == 1);
  CHECK(code_of([&] { fetch_bfile("A000045", base, cache); }) == Errc::IoError);
  CHECK(code_of([&] { fetch_bfile("A12", base, cache); }) == Errc::BadParams);

  server.stop();
  worker.join();
  CHECK(code_of([&] { fetch_bfile("A000045", base, cache); }) == Errc::IoError);
  fs::remove_all(cache);
}
