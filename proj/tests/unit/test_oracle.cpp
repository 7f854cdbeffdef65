#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "motzkin/error.hpp"
#include "motzkin/oracle.hpp"

using namespace motzkin;
using namespace motzkin::oracle;

namespace {

std::vector<std::size_t> dyck_counts(int k, int a, int n_max) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(enumerate_dyck(k, a, n, 0).size());
  return out;
}

}  // namespace

TEST_CASE("motzkin enumeration matches the figures") {
  CHECK(enumerate_motzkin(3, 0, ColorScheme({1}, {2})).size() == 5);
  CHECK(enumerate_motzkin(3, 0, ColorScheme({1, 2}, {3, 3})).size() == 12);
  const auto empty = enumerate_motzkin(0, 0, ColorScheme({4}, {7}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length() == 0);
  CHECK(enumerate_motzkin(2, 3, ColorScheme({1}, {1})).empty());
}

TEST_CASE("motzkin enumeration order and uniqueness") {
  const ColorScheme s({1, 2}, {2, 1});
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto paths = enumerate_motzkin(n, m, s);
      CHECK(std::ranges::is_sorted(paths));
      std::set<std::string> texts;
      for (const auto& p : paths) {
        texts.insert(p.to_text());
        CHECK(p.height() == m);
        CHECK(p.length() == n);
      }
      CHECK(texts.size() == paths.size());
      CHECK(enumerate_motzkin(n, m, s) == paths);
    }
    CHECK(enumerate_motzkin(n, n, s).size() == 1);
  }
}

TEST_CASE("height counts agree with materialized enumeration") {
  const ColorScheme s({2, 0}, {1, 3});
  for (int n = 0; n <= 6; ++n) {
    const auto counts = count_motzkin_by_height(n, s);
    std::size_t total = 0;
    for (int m = 0; m <= n; ++m) {
      CHECK(counts[static_cast<std::size_t>(m)] == enumerate_motzkin(n, m, s).size());
      total += counts[static_cast<std::size_t>(m)];
    }
    CHECK(total == enumerate_motzkin_all_heights(n, s).size());
  }
}

TEST_CASE("dyck enumeration") {
  CHECK(enumerate_dyck(3, 1, 2, 0).size() == 7);
  CHECK(enumerate_dyck(2, 0, 3, 0).size() == 5);
  const auto up = enumerate_dyck(2, 0, 1, 1);
  REQUIRE(up.size() == 1);
  CHECK(up[0].to_text() == "U U");
  CHECK(dyck_counts(2, 0, 6) == std::vector<std::size_t>{1, 1, 2, 5, 14, 42, 132});
  CHECK(dyck_counts(3, 0, 4) == std::vector<std::size_t>{1, 1, 3, 12, 55});
  CHECK_THROWS_AS(enumerate_dyck(3, 3, 1, 0), Error);
  CHECK_THROWS_AS(enumerate_dyck(1, 0, 1, 0), Error);
  const auto all = enumerate_dyck(3, 2, 3, 0);
  CHECK(std::ranges::is_sorted(all));
}

TEST_CASE("fine enumeration") {
  std::vector<std::size_t> counts;
  for (int n = 0; n <= 5; ++n) counts.push_back(enumerate_fine(2, 0, 1, n, 0).size());
  CHECK(counts == std::vector<std::size_t>{1, 0, 1, 2, 6, 18});
  CHECK(enumerate_fine(3, 0, 2, 2, 0).size() == 2);
  CHECK(enumerate_fine(3, 0, 2, 0, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_fine(3, 0, 3, 1, 0), Error);
}

TEST_CASE("family containments") {
  for (int k = 2; k <= 4; ++k) {
    for (int a = 0; a < k; ++a) {
      for (int n = 1; n <= 4; ++n) {
        const auto all = enumerate_dyck(k, a, n, 0);
        const std::set<DyckPath> dyck(all.begin(), all.end());
        for (int r = 1; r < k; ++r) {
          const auto fine = enumerate_fine(k, a, r, n, 0);
          for (const auto& p : fine) CHECK(dyck.contains(p));
          if (r + 1 < k) {
            const auto wider = enumerate_fine(k, a, r + 1, n, 0);
            const std::set<DyckPath> w(wider.begin(), wider.end());
            for (const auto& p : fine) CHECK(w.contains(p));
          }
        }
        for (int i = 0; i < k; ++i) {
          for (const auto& p : enumerate_peak_parity(k, a, i, n, 0)) CHECK(dyck.contains(p));
        }
      }
    }
  }
}

TEST_CASE("peak parity enumeration") {
  std::vector<std::size_t> riordan, shifted_motzkin;
  for (int n = 1; n <= 6; ++n) {
    riordan.push_back(enumerate_peak_parity(2, 0, 0, n, 0).size());
    shifted_motzkin.push_back(enumerate_peak_parity(2, 0, 1, n, 0).size());
  }
  CHECK(riordan == std::vector<std::size_t>{0, 1, 1, 3, 6, 15});
  CHECK(shifted_motzkin == std::vector<std::size_t>{1, 1, 2, 4, 9, 21});
  const auto one = enumerate_peak_parity(3, 0, 2, 1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_text() == "U U D2");
  try {
    enumerate_peak_parity(2, 0, 0, 0, 0);
    FAIL("expected EmptyLength");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyLength);
  }
}

TEST_CASE("tree enumeration") {
  std::vector<std::size_t> counts;
  for (int n = 0; n <= 5; ++n) counts.push_back(enumerate_trees(2, n, ChildSet::all(2)).size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 4, 9, 21});
  CHECK(enumerate_trees(3, 3, ChildSet::from_subset(3, {0})).size() == 1);
  CHECK(enumerate_trees(3, 6, ChildSet::from_subset(3, {0})).size() == 3);
  const auto single = enumerate_trees(4, 0, ChildSet::all(4));
  REQUIRE(single.size() == 1);
  CHECK(single[0].to_text() == "()");
  const auto trees = enumerate_trees(3, 5, ChildSet::all(3));
  std::set<std::string> texts;
  for (const auto& t : trees) texts.insert(t.to_text());
  CHECK(texts.size() == trees.size());
  CHECK(std::ranges::is_sorted(trees, {}, &KaryTree::child_counts));
  CHECK(ChildSet::from_subset(3, {1}).scheme() == ColorScheme({1, 0}, {1, 0}));
  CHECK(ChildSet::all(3).scheme() == ColorScheme({1, 1}, {1, 1}));
  CHECK_THROWS_AS(ChildSet::from_subset(3, {3}), Error);
}
