#include <doctest.h>

#include "gtseq/grid.hpp"
#include "gtseq/operators.hpp"
#include "gtseq/patterns.hpp"
#include "oracles.hpp"

using namespace gtseq;

namespace {

const std::vector<std::vector<int>> kExampleRows{
    {2}, {2, 2}, {1, 2, 4}, {1, 1, 3, 4}, {0, 1, 3, 3, 5}, {0, 0, 2, 3, 5, 6}};

}  // namespace

TEST_CASE("pattern enumeration examples") {
  auto p = all_patterns({0, 1});
  REQUIRE(p.size() == 2);
  CHECK(p[0].rows[0] == std::vector<int>{0});
  CHECK(p[1].rows[0] == std::vector<int>{1});
  CHECK(p[0].sign == 1);
  CHECK(p[1].sign == 1);
  CHECK(all_patterns({1, 0}).empty());

  GTPattern ex = make_pattern(kExampleRows);
  CHECK(ex.inversions.empty());
  CHECK(ex.sign == 1);
  bool found = false;
  enumerate_patterns({0, 0, 2, 3, 5, 6}, [&](const GTPattern& q) { found = found || q.rows == kExampleRows; });
  CHECK(found);

  CHECK_THROWS(make_pattern({{3}, {1, 2}}));
  CHECK_THROWS(make_pattern({{0}, {1, 0}}));
  GTPattern inv = make_pattern({{1}, {2, 0}});
  CHECK(inv.inversions == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(inv.sign == -1);
}

TEST_CASE("signed pattern count equals the product and the oracle") {
  for (int n = 1; n <= 4; ++n) {
    const Range g = n <= 3 ? Range{-3, 3} : Range{-2, 2};
    for (const Point& k : grid_points(n, g)) {
      const BigInt c = pattern_signed_count(k);
      REQUIRE(c == product_formula(k));
      if (n <= 3) REQUIRE(c == oracle::pattern_count(k));
    }
  }
}

TEST_CASE("patterns and tree sequences over basic trees") {
  GTPattern zero = make_pattern({{0}, {0, 0}, {0, 0, 0}});
  GTTreeSequence s = pattern_to_tree_sequence(zero);
  CHECK(s.levels == std::vector<Point>{{0}, {0, 0}, {0, 0, 0}});
  CHECK(s.sign == 1);

  GTTreeSequence t = pattern_to_tree_sequence(make_pattern({{1}, {2, 0}}));
  CHECK(t.levels[0][0] + 1 == 2);  // actual edge label
  CHECK(t.inversions[1] == std::vector<int>{1});
  CHECK(t.sign == -1);

  GTTreeSequence ex = pattern_to_tree_sequence(make_pattern(kExampleRows));
  for (std::size_t i = 0; i < kExampleRows.size(); ++i) CHECK(ex.levels[i] == kExampleRows[i]);
  CHECK(tree_sequence_to_pattern(ex).rows == kExampleRows);

  for (int n = 1; n <= 4; ++n) {
    const auto basic = canonical_trees(TreeFamily::kBasic, n);
    for (const Point& k : grid_points(n, n <= 3 ? Range{-2, 2} : Range{-1, 1})) {
      auto pats = all_patterns(k);
      auto seqs = all_sequences(basic, k);
      REQUIRE(pats.size() == seqs.size());
      for (std::size_t i = 0; i < pats.size(); ++i) {
        auto m = pattern_to_tree_sequence(pats[i]);
        CHECK(m.levels == seqs[i].levels);
        CHECK(m.sign == seqs[i].sign);
        CHECK(tree_sequence_to_pattern(m).rows == pats[i].rows);
      }
    }
  }
}

TEST_CASE("patterns and semistandard tableaux") {
  SSYT t = pattern_to_ssyt(make_pattern(kExampleRows));
  CHECK(t.shape == std::vector<int>{6, 5, 3, 2, 0, 0});
  REQUIRE(t.rows.size() >= 4);
  CHECK(t.rows[0] == std::vector<int>{1, 1, 3, 3, 5, 6});
  CHECK(t.rows[1] == std::vector<int>{2, 2, 4, 6, 6});
  CHECK(t.rows[2] == std::vector<int>{3, 5, 5});
  CHECK(t.rows[3] == std::vector<int>{4, 6});
  CHECK(ssyt_to_pattern(t, 6).rows == kExampleRows);

  SSYT empty = pattern_to_ssyt(make_pattern({{0}, {0, 0}}));
  for (const auto& r : empty.rows) CHECK(r.empty());

  // bottom row (1,2): shape (2,1), entries <= 2
  std::vector<SSYT> direct;
  enumerate_ssyt({2, 1}, 2, [&](const SSYT& s) { direct.push_back(s); });
  auto pats = all_patterns({1, 2});
  REQUIRE(direct.size() == pats.size());
  for (const auto& p : pats) {
    SSYT s = pattern_to_ssyt(p);
    CHECK(is_ssyt(s, 2));
    CHECK(std::find(direct.begin(), direct.end(), s) != direct.end());
  }

  CHECK_THROWS(pattern_to_ssyt(make_pattern({{1}, {2, 0}})));
  CHECK_THROWS(pattern_to_ssyt(make_pattern({{-1}, {-1, 0}})));

  for (int n = 1; n <= 4; ++n) {
    for (const Point& k : grid_points(n, {0, 3})) {
      if (!std::is_sorted(k.begin(), k.end())) continue;
      std::vector<int> shape(k.rbegin(), k.rend());
      CHECK(count_ssyt(shape, n) == pattern_signed_count(k));
      for (const auto& p : all_patterns(k)) CHECK(ssyt_to_pattern(pattern_to_ssyt(p), n).rows == p.rows);
    }
  }
}

TEST_CASE("four-set decomposition") {
  for (const Point& k : grid_points(2, {-2, 2})) {
    auto d = shift_antisym_decomposition(k, 1);
    CHECK(d[1] == 0);
    CHECK(d[2] == 0);
    CHECK(d[3] == 0);
    CHECK(d[0] == product_formula(k));
  }
  auto d = shift_antisym_decomposition({0, 1, 2}, 1);
  CHECK(d[0] + d[1] + d[2] + d[3] == 8);

  for (const Point& k : grid_points(3, {-2, 2})) {
    for (int i = 1; i <= 2; ++i) {
      auto a = shift_antisym_decomposition(k, i);
      auto b = shift_antisym_decomposition(shift_antisym_partner(k, i), i);
      for (std::size_t c = 0; c < 4; ++c) CHECK(a[c] == -b[c]);
    }
  }
  CHECK(shift_antisym_partner({0, 1, 2}, 1) == Point{2, -1, 2});
  CHECK_THROWS(shift_antisym_decomposition({0, 1}, 2));
  CHECK_THROWS(shift_antisym_decomposition({0, 1}, 0));
}
