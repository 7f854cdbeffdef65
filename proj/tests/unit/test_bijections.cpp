#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "motzkin/bijections.hpp"
#include "motzkin/closedform.hpp"
#include "motzkin/error.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/riordan.hpp"

using namespace motzkin;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::IoError;
}

DyckPath dyck_ud(std::string_view text, int k, int a) {
  std::vector<bool> ups;
  for (char c : text) ups.push_back(c == 'U');
  return make_dyck(ups, k, a);
}

std::string ud(const DyckPath& p) {
  std::string out;
  for (bool u : p.ups()) out += u ? 'U' : 'D';
  return out;
}

MotzkinPath mp(std::string_view text, const ColorScheme& s) { return validate_motzkin(parse_steps(text), s); }

std::vector<ColorScheme> equal_schemes(int order, int max) {
  std::vector<ColorScheme> out;
  std::vector<int> v(order, 0);
  while (true) {
    out.emplace_back(v, v);
    int i = 0;
    while (i < order && v[i] == max) v[i++] = 0;
    if (i == order) break;
    ++v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("row-sum map on the worked example") {
  const ColorScheme s({1, 1}, {1, 1});
  const auto in = mp("U D0:1 U D2 U U D1:1 U D0:1", s);
  CHECK(in.height() == 2);
  const auto out = rowsum_forward(in);
  CHECK(out.to_text() == "U D0:1 U D2 D0:2 U D1:1 D0:2 D0:1");
  CHECK(out.height() == 0);
  CHECK(out.scheme() == s.bump_alpha());
  CHECK(rowsum_inverse(out) == in);
}

TEST_CASE("row-sum map edge cases") {
  const ColorScheme s({2}, {2});
  const auto flat = mp("U D0:2 D1 D0:1", s);
  CHECK(rowsum_forward(flat).to_text() == flat.to_text());
  CHECK(rowsum_forward(mp("U U U", s)).to_text() == "D0:3 D0:3 D0:3");
  CHECK(rowsum_inverse(mp("D0:3 D0:3", s.bump_alpha())).to_text() == "U U");
  CHECK(rowsum_forward(mp("", s)).length() == 0);
  CHECK(code_of([] { rowsum_forward(mp("U", ColorScheme({1}, {2}))); }) == Errc::InvalidScheme);
  CHECK(code_of([&] { rowsum_inverse(mp("D0:1", s)); }) == Errc::InvalidScheme);
  CHECK(code_of([&] { rowsum_inverse(mp("U", s.bump_alpha())); }) == Errc::InvalidPath);
}

TEST_CASE("row-sum map is a bijection at n = 6") {
  for (int order = 1; order <= 2; ++order) {
    for (const auto& s : equal_schemes(order, 2)) {
      const auto domain = oracle::enumerate_motzkin_all_heights(6, s);
      std::set<MotzkinPath> image;
      for (const auto& p : domain) {
        const auto q = rowsum_forward(p);
        CHECK(q.height() == 0);
        CHECK(rowsum_inverse(q) == p);
        image.insert(q);
      }
      const auto codomain = oracle::enumerate_motzkin(6, 0, s.bump_alpha());
      CHECK(image == std::set<MotzkinPath>(codomain.begin(), codomain.end()));
    }
  }
}

TEST_CASE("codebooks") {
  const auto zero = make_codebook(2, 0, BlockContext::EndsAtZero, 1);
  REQUIRE(zero.words.size() == 2);
  CHECK(zero.words[0] == std::vector<bool>{true, false});
  CHECK(zero.words[1] == std::vector<bool>{false, true});
  CHECK(make_codebook(2, 0, BlockContext::EndsAtZero, 0).words.size() == 1);
  CHECK(make_codebook(4, 1, BlockContext::EndsAbove, 0).words.size() == 6);
  for (int k = 2; k <= 6; ++k) {
    for (int a = 0; a < k; ++a) {
      CHECK(dyck_scheme(k, a) == scheme_from_az(dyck_az(k, a)));
      for (int r = 1; r < k; ++r) {
        CAPTURE(k);
        CAPTURE(a);
        CAPTURE(r);
        CHECK(dyck_scheme(k, a, r) == scheme_from_az(fine_az(k, a, r)));
      }
    }
  }
  const auto book = make_codebook(4, 1, BlockContext::EndsAbove, 0);
  CHECK(std::ranges::is_sorted(book.words, [](const auto& x, const auto& y) {
    // U before D
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](bool p, bool q) { return p && !q; });
  }));
}

TEST_CASE("dyck map on the worked example") {
  const ColorScheme s = dyck_scheme(2, 1);
  CHECK(s == ColorScheme({2}, {2}));
  const auto in = mp("D0:1 U D0:2 D0:1 D1 D0:2", s);
  const auto out = motzkin_to_dyck(in, 2, 1);
  CHECK(ud(out) == "UDUUDUUDDDDU");
  CHECK(std::ranges::min(out.profile()) == -1);
  CHECK(out.length() == 12);
  CHECK(dyck_to_motzkin(out, 2, 1) == in);
}

TEST_CASE("dyck map edge cases") {
  const ColorScheme s = dyck_scheme(3, 1);
  CHECK(ud(motzkin_to_dyck(mp("U U", s), 3, 1)) == "UUUUUU");
  CHECK(motzkin_to_dyck(mp("", s), 3, 1).length() == 0);
  CHECK(dyck_to_motzkin(dyck_ud("", 3, 1), 3, 1).length() == 0);
  CHECK(code_of([&] { motzkin_to_dyck(mp("U U", s), 3, 0); }) == Errc::SchemeMismatch);
  CHECK(code_of([&] { dyck_to_motzkin(dyck_ud("UUU", 3, 1), 3, 0); }) == Errc::BadParams);
  // a colored path under a wider scheme can carry a color past the codebook
  const ColorScheme wide({5, 5}, {5, 5});
  CHECK(code_of([&] { motzkin_to_dyck(mp("D0:5", wide), 3, 1); }) == Errc::SchemeMismatch);
}

TEST_CASE("dyck map is a bijection for k <= 4, n <= 4") {
  for (int k = 2; k <= 4; ++k) {
    for (int a = 0; a < k; ++a) {
      const ColorScheme s = dyck_scheme(k, a);
      for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= n; ++m) {
          std::set<DyckPath> image;
          for (const auto& p : oracle::enumerate_motzkin(n, m, s)) {
            const auto q = motzkin_to_dyck(p, k, a);
            CHECK(q.length() == k * p.length());
            CHECK(q.final_height() == k * p.height());
            CHECK(dyck_to_motzkin(q, k, a) == p);
            image.insert(q);
          }
          const auto target = oracle::enumerate_dyck(k, a, n, m);
          CHECK(image == std::set<DyckPath>(target.begin(), target.end()));
        }
      }
    }
  }
}

TEST_CASE("restricted codebooks give the fine paths") {
  for (int k = 2; k <= 4; ++k) {
    for (int a = 0; a < k; ++a) {
      for (int r = 1; r < k; ++r) {
        const ColorScheme s = dyck_scheme(k, a, r);
        for (int n = 0; n <= 4; ++n) {
          for (int m = 0; m <= n; ++m) {
            std::set<DyckPath> image;
            for (const auto& p : oracle::enumerate_motzkin(n, m, s)) {
              const auto q = motzkin_to_dyck(p, k, a, r);
              CHECK(dyck_to_motzkin(q, k, a, r) == p);
              image.insert(q);
            }
            const auto target = oracle::enumerate_fine(k, a, r, n, m);
            CAPTURE(k);
            CAPTURE(a);
            CAPTURE(r);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(image == std::set<DyckPath>(target.begin(), target.end()));
          }
        }
      }
    }
  }
}

TEST_CASE("peak parity zero scheme") {
  CHECK(peak0_scheme(2, 0) == ColorScheme({0}, {1}));
  CHECK(peak0_scheme(3, 0) == ColorScheme({0, 0}, {1, 1}));
  CHECK(peak0_scheme(3, 1) == ColorScheme({0, 1}, {1, 1}));
  CHECK(peak0_scheme(3, 2) == ColorScheme({1, 1}, {1, 1}));
  CHECK(peak0_scheme(4, 1) == ColorScheme({0, 0, 1}, {1, 1, 1}));

  // With k = 3, a = 1 a single D0 block D U U from 0 dips to -2, so no
  // semilength-1 path qualifies; alpha_i = [i < a] would count one.
  CHECK(oracle::enumerate_peak_parity(3, 1, 0, 1, 0).empty());
  CHECK(motzkin_triangle(ColorScheme({1, 0}, {1, 1}), 2).at(1, 0) == 1);
  CHECK(motzkin_triangle(peak0_scheme(3, 1), 2).at(1, 0) == 0);

  for (int k = 2; k <= 5; ++k) {
    for (int a = 0; a < k; ++a) {
      const Triangle t = motzkin_triangle(peak0_scheme(k, a), 6);
      for (int n = 1; n <= (k <= 3 ? 5 : 4); ++n) {
        for (int m = 0; m <= n; ++m) {
          CAPTURE(k);
          CAPTURE(a);
          CAPTURE(n);
          CAPTURE(m);
          CHECK(t.at(n, m) == oracle::enumerate_peak_parity(k, a, 0, n, m).size());
        }
      }
    }
  }
}

TEST_CASE("peak parity zero map on the worked example") {
  const ColorScheme s = peak0_scheme(3, 0);
  const auto in = mp("U D0:1 U D1:1 U D2", s);
  CHECK(in.length() == 6);
  const auto out = peak0_forward(in, 3, 0);
  CHECK(ud(out) == "UUUDUUUUUDDUUUUDDD");
  CHECK(peaks_of(out) == std::vector<int>{3, 6, 6});
  CHECK(peak_parity_of(out) == PeakParity{PeakParity::Kind::Uniform, 0});
  CHECK(peak0_inverse(out) == in);
  CHECK(peak0_forward(mp("", s), 3, 0).length() == 0);
  CHECK(code_of([&] { peak0_forward(in, 3, 1); }) == Errc::SchemeMismatch);
  CHECK(code_of([] { peak0_inverse(dyck_ud("UDUD", 2, 0)); }) == Errc::NotParityZero);
}

TEST_CASE("peak parity zero map is a bijection") {
  std::set<DyckPath> image;
  for (const auto& p : oracle::enumerate_motzkin(4, 0, peak0_scheme(2, 0))) image.insert(peak0_forward(p, 2, 0));
  CHECK(image.size() == 3);
  for (int k = 2; k <= 4; ++k) {
    for (int a = 0; a < k; ++a) {
      for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= n; ++m) {
          std::set<DyckPath> img;
          for (const auto& p : oracle::enumerate_motzkin(n, m, peak0_scheme(k, a))) {
            const auto q = peak0_forward(p, k, a);
            CHECK(peak0_inverse(q) == p);
            img.insert(q);
          }
          const auto target = oracle::enumerate_peak_parity(k, a, 0, n, m);
          CHECK(img == std::set<DyckPath>(target.begin(), target.end()));
        }
      }
    }
  }
}

TEST_CASE("peak parity k-1 reduction") {
  const auto small = peak_top_reduce(dyck_ud("UDUD", 2, 0));
  CHECK(ud(small) == "DU");
  CHECK(small.depth() == 1);
  CHECK(peak_top_expand(small) == dyck_ud("UDUD", 2, 0));
  CHECK(code_of([] { peak_top_reduce(dyck_ud("UUDD", 2, 0)); }) == Errc::WrongParity);
  CHECK(code_of([] { peak_top_reduce(dyck_ud("", 2, 0)); }) == Errc::BadDecomposition);
  CHECK(code_of([] { peak_top_reduce(dyck_ud("UU", 2, 0)); }) == Errc::BadDecomposition);

  CHECK(oracle::enumerate_peak_parity(2, 0, 1, 3, 0).size() == 2);
  CHECK(oracle::enumerate_peak_parity(3, 0, 2, 2, 0).size() == 1);
  for (int k = 2; k <= 4; ++k) {
    const ColorScheme ones = ColorScheme::uniform(k - 1, 1);
    for (int n = 1; n <= 5; ++n) {
      std::set<MotzkinPath> image;
      const auto domain = oracle::enumerate_peak_parity(k, 0, k - 1, n, 0);
      for (const auto& p : domain) {
        const auto q = peak_top_reduce(p);
        CHECK(q.semilength() == n - 1);
        CHECK(peak_top_expand(q) == p);
        image.insert(peak0_inverse(q));
      }
      const auto target = oracle::enumerate_motzkin(n - 1, 0, ones);
      CHECK(image == std::set<MotzkinPath>(target.begin(), target.end()));
    }
  }
}

TEST_CASE("tree map on the worked example") {
  const KaryTree t = parse_tree("((()(()))()((()()())))", 3);
  const auto p = tree_to_motzkin(t);
  CHECK(p.to_text() == "U U D1:1 D0:1 U D2 D0:1 U U D2");
  CHECK(p.scheme() == ColorScheme::uniform(2, 1));
  CHECK(p.height() == 0);
  CHECK(motzkin_to_tree(p, 3) == t);
  CHECK(tree_to_motzkin(parse_tree("()", 4)).length() == 0);
  CHECK(motzkin_to_tree(mp("", ColorScheme::uniform(3, 1)), 4) == parse_tree("()", 4));
  CHECK(code_of([] { motzkin_to_tree(mp("U", ColorScheme::uniform(1, 1)), 2); }) == Errc::InvalidPath);
  CHECK(code_of([] { motzkin_to_tree(mp("", ColorScheme::uniform(1, 1)), 3); }) == Errc::InvalidPath);
  CHECK(code_of([] { motzkin_to_tree(mp("", ColorScheme::uniform(1, 2)), 2); }) == Errc::InvalidPath);
}

TEST_CASE("tree map is a bijection") {
  for (int k = 2; k <= 4; ++k) {
    const ColorScheme ones = ColorScheme::uniform(k - 1, 1);
    for (int n = 0; n <= 6; ++n) {
      std::set<MotzkinPath> image;
      for (const auto& t : oracle::enumerate_trees(k, n, oracle::ChildSet::all(k))) {
        const auto p = tree_to_motzkin(t);
        CHECK(p.length() == n);
        CHECK(motzkin_to_tree(p, k) == t);
        image.insert(p);
      }
      const auto target = oracle::enumerate_motzkin(n, 0, ones);
      CHECK(image == std::set<MotzkinPath>(target.begin(), target.end()));
    }
  }
}

TEST_CASE("restricted trees") {
  const int k = 3;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> subset;
    for (int j = 0; j < 3; ++j) {
      if (mask & (1 << j)) subset.push_back(j);
    }
    const auto children = oracle::ChildSet::from_subset(k, subset);
    const Triangle t = motzkin_triangle(children.scheme(), 7);
    for (int n = 0; n <= 6; ++n) {
      const auto trees = oracle::enumerate_trees(k, n, children);
      CHECK(t.at(n, 0) == trees.size());
      for (const auto& tree : trees) {
        // the restricted image only uses colors the S-scheme allows
        CHECK_NOTHROW(validate_motzkin(tree_to_motzkin(tree).steps(), children.scheme()));
      }
    }
  }
}

TEST_CASE("stripping new-color level steps") {
  const ColorScheme base({1}, {1});
  const ColorScheme bumped = base.bump_both();
  const auto same = mp("U D0:1 D1", bumped);
  const auto [kept, none] = strip_new_color_levels(same);
  CHECK(kept.to_text() == same.to_text());
  CHECK(kept.scheme() == base);
  CHECK(none.empty());
  const auto [empty, all] = strip_new_color_levels(mp("D0:2 D0:2 D0:2", bumped));
  CHECK(empty.length() == 0);
  CHECK(all == std::vector<int>{0, 1, 2});
  const auto [mixed, pos] = strip_new_color_levels(mp("U D0:2 D0:1 D1 D0:2", bumped));
  CHECK(mixed.to_text() == "U D0:1 D1");
  CHECK(pos == std::vector<int>{1, 4});
  CHECK(code_of([] { strip_new_color_levels(mp("U D1", ColorScheme({0}, {1}))); }) == Errc::InvalidScheme);

  // fibers over each output of length j have C(n, n-j) elements
  const int n = 4;
  std::map<MotzkinPath, int> fibers;
  const auto domain = oracle::enumerate_motzkin(n, 0, bumped);
  for (const auto& p : domain) fibers[strip_new_color_levels(p).first]++;
  int total = 0;
  for (const auto& [out, size] : fibers) {
    CHECK(size == binomial(n, n - out.length()));
    total += size;
  }
  CHECK(total == static_cast<int>(domain.size()));
  const Sequence col = motzkin_triangle(base, n + 1).column(0);
  CHECK(BigInt(total) == binomial_transform(col)[n]);
}
