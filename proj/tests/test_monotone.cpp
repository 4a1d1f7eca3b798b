#include <doctest.h>

#include "gtseq/grid.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/operators.hpp"
#include "oracles.hpp"

using namespace gtseq;

TEST_CASE("alpha examples") {
  for (int c = -4; c <= 4; ++c) CHECK(alpha({c}) == 1);
  CHECK(alpha({0, 2}) == 3);
  CHECK(alpha({1, 2, 3}) == 7);
  CHECK(alpha({2, 0}) == -1);
  CHECK(alpha({1, 2, 3, 4}) == 42);
  CHECK(alpha({1, 2, 3, 4, 5}) == 429);
}

TEST_CASE("alpha agrees with the interpolation oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (const Point& k : grid_points(n, {-2, 2})) REQUIRE(alpha(k) == oracle::alpha(k));
  }
  for (const Point& k : grid_points(4, {-1, 1})) REQUIRE(alpha(k) == oracle::alpha(k));
}

TEST_CASE("alpha memo is shared and clearable") {
  clear_alpha_cache();
  CHECK(alpha_cache_size() == 0);
  alpha({0, 1, 3});
  CHECK(alpha_cache_size() > 0);
  clear_alpha_cache();
  CHECK(alpha_cache_size() == 0);
}

TEST_CASE("extension examples") {
  std::vector<ExtTriangle> objs;
  enumerate_extension(Extension::kFirst, {1, 3}, [&](const ExtTriangle& t) { objs.push_back(t); });
  REQUIRE(objs.size() == 3);
  int starred = 0;
  for (const auto& t : objs) {
    CHECK(t.sign == 1);
    if (t.marks[0][0] == 1) {
      ++starred;
      CHECK(t.rows[0][0] == 1);
    } else {
      CHECK((t.rows[0][0] == 2 || t.rows[0][0] == 3));
    }
  }
  CHECK(starred == 1);

  for (int c = -2; c <= 2; ++c) {
    std::vector<int> signs;
    enumerate_extension(Extension::kFourth, {c}, [&](const ExtTriangle& t) { signs.push_back(t.sign); });
    std::sort(signs.begin(), signs.end());
    CHECK(signs == std::vector<int>{-1, 1, 1});
    CHECK(extension_signed_count(Extension::kFourth, {c}) == 1);
  }
  CHECK(extension_signed_count(Extension::kThird, {1, 2, 3}) == 7);
  CHECK_THROWS(parse_extension("fifth"));
  CHECK(parse_extension("2") == Extension::kSecond);
}

TEST_CASE("all extensions agree with alpha") {
  for (int n = 1; n <= 3; ++n) {
    for (const Point& k : grid_points(n, {-2, 2})) {
      const BigInt a = alpha(k);
      for (auto v : {Extension::kFirst, Extension::kSecond, Extension::kThird, Extension::kFourth}) {
        REQUIRE(extension_signed_count(v, k) == a);
      }
      REQUIRE(extension_signed_count(Extension::kThird, k, ExtOptions{true}) == a);
    }
  }
}

TEST_CASE("extension signs on strictly increasing rows") {
  for (int n = 1; n <= 3; ++n) {
    for (const Point& k : grid_points(n, {0, 3})) {
      if (std::adjacent_find(k.begin(), k.end(), std::greater_equal<int>()) != k.end()) continue;
      for (auto v : {Extension::kFirst, Extension::kSecond}) {
        BigInt count = 0;
        enumerate_extension(v, k, [&](const ExtTriangle& t) {
          CHECK(t.sign == 1);
          count += 1;
        });
        CHECK(count == oracle::monotone_triangles(k));
      }
    }
  }
}

TEST_CASE("operator forms of alpha") {
  for (auto form : {OperatorForm::kThreeTerm, OperatorForm::kDeltaDelta}) {
    for (int c = -2; c <= 2; ++c) CHECK(alpha_via_operator({c}, form) == 1);
    CHECK(alpha_via_operator({0, 2}, form) == 3);
    CHECK(alpha_via_operator({1, 2, 3}, form) == 7);
    for (const Point& k : grid_points(3, {-1, 1})) CHECK(alpha_via_operator(k, form) == alpha(k));
  }
  CHECK(alpha_operator(1, OperatorForm::kThreeTerm) == OperatorExpression::identity(1));
  CHECK(parse_operator_form("delta-delta") == OperatorForm::kDeltaDelta);
  CHECK_THROWS(parse_operator_form("other"));
}

TEST_CASE("strict-row patterns") {
  CHECK(strict_row_patterns({0, 0}) == 1);
  CHECK(strict_row_patterns({1, 2, 3}) == 7);
  CHECK(strict_row_patterns({0, 0, 1}) == alpha({0, 0, 1}));
  for (int n = 1; n <= 4; ++n) {
    for (const Point& k : grid_points(n, {0, 3})) {
      if (std::is_sorted(k.begin(), k.end())) CHECK(strict_row_patterns(k) == alpha(k));
    }
  }
  CHECK_THROWS(strict_row_patterns({1, 0}));
}

TEST_CASE("refined counts") {
  CHECK(refined_asm(1).route_c == std::vector<BigInt>{1});
  CHECK(refined_asm(3).route_c == std::vector<BigInt>{2, 3, 2});
  CHECK(refined_asm(4).route_c == std::vector<BigInt>{7, 14, 14, 7});
  for (int n = 1; n <= 5; ++n) {
    RefinedCounts r = refined_asm(n);
    CHECK(r.agree);
    CHECK(r.route_a == r.route_c);
    CHECK(r.route_b == r.route_c);
    std::vector<BigInt> asm_counts(static_cast<std::size_t>(n), 0);
    for (const auto& m : oracle::all_asms(n)) asm_counts[oracle::one_position(m.front())] += 1;
    CHECK(r.route_c == asm_counts);
    for (int i = 0; i < n; ++i) CHECK(r.route_c[i] == r.route_c[n - 1 - i]);
  }
}

TEST_CASE("doubly refined counts") {
  CHECK(doubly_refined_asm(1).doubly == std::vector<std::vector<BigInt>>{{1}});
  for (int n = 1; n <= 4; ++n) {
    RefinedCounts r = doubly_refined_asm(n);
    CHECK(r.doubly == r.doubly_brute);
    std::vector<std::vector<BigInt>> asms(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
    for (const auto& m : oracle::all_asms(n)) asms[oracle::one_position(m.front())][oracle::one_position(m.back())] += 1;
    CHECK(r.doubly == asms);
    BigInt total = 0;
    for (int i = 0; i < n; ++i) {
      BigInt row = 0;
      for (int j = 0; j < n; ++j) {
        row += r.doubly[i][j];
        CHECK(r.doubly[i][j] == r.doubly[j][i]);
      }
      CHECK(row == refined_asm(n).route_c[i]);
      total += row;
    }
    if (n == 3) CHECK(total == 7);
  }
}

TEST_CASE("alpha properties") {
  for (auto p : {AlphaProperty::kP1, AlphaProperty::kP2, AlphaProperty::kP3, AlphaProperty::kP4}) {
    for (int n = 1; n <= 3; ++n) {
      PropertyReport r = check_alpha_property(p, n, {-2, 2});
      CHECK(r.violations.empty());
      if (n >= 2) CHECK(r.points_checked > 0);
    }
  }
  for (const Point& k : grid_points(2, {-2, 2})) CHECK(alpha(k) == -alpha({k[1], k[0] - 2}));

  OperatorExpression e1 = OperatorExpression::elementary_symmetric(
      1, {OperatorExpression::forward(3, 1), OperatorExpression::forward(3, 2), OperatorExpression::forward(3, 3)});
  CHECK(apply_operator(e1, alpha_function(3), {0, 0, 0}) == 0);

  // substitute (2,3,2) into the linear system
  const std::vector<int> a3{2, 3, 2};
  for (int i = 1; i <= 3; ++i) {
    BigInt rhs = 0;
    for (int k = i; k <= 3; ++k) {
      rhs += binomial(BigInt(5 - i), k - i) * ((k + 3) % 2 ? -1 : 1) * a3[static_cast<std::size_t>(k - 1)];
    }
    CHECK(rhs == a3[static_cast<std::size_t>(i - 1)]);
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(check_alpha_property(AlphaProperty::kLinearSystem, n, {0, 0}).violations.empty());
    CHECK(check_alpha_property(AlphaProperty::kDoublyRefinedIdentity, n, {0, 0}).violations.empty());
  }
  CHECK(to_string(parse_alpha_property("P3")) == "P3");
  CHECK_THROWS(parse_alpha_property("P5"));
}
