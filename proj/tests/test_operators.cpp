#include <doctest.h>

#include <atomic>
#include <thread>

#include "gtseq/grid.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/operators.hpp"
#include "gtseq/verify.hpp"
#include "oracles.hpp"

using namespace gtseq;
using Op = OperatorExpression;

TEST_CASE("product formula") {
  CHECK(product_formula({0, 0, 0}) == 1);
  CHECK(product_formula({1, 2, 3}) == 8);
  CHECK(product_formula({2, 0}) == -1);
  CHECK(product_formula({}) == 1);
  CHECK(product_formula({0, 10, 20, 30, 40, 50, 60}) == oracle::product({0, 10, 20, 30, 40, 50, 60}));
  for (int n = 1; n <= 4; ++n) {
    for (const Point& k : grid_points(n, {-3, 3})) REQUIRE(product_formula(k) == oracle::product(k));
  }
}

TEST_CASE("binomial determinant") {
  CHECK(binomial_determinant({0, 0, 0, 0}) == 1);
  CHECK(binomial_determinant({0, 2}) == 3);
  CHECK(binomial_determinant({2, 0}) == -1);
  for (int n = 1; n <= 4; ++n) {
    for (const Point& k : grid_points(n, {-3, 3})) {
      const BigInt d = binomial_determinant(k);
      REQUIRE(d == product_formula(k));
      if (n <= 3) REQUIRE(d == oracle::determinant(k));
    }
  }
}

TEST_CASE("extended summation") {
  auto one = [](int) { return BigInt(1); };
  auto id = [](int i) { return BigInt(i); };
  CHECK(extended_sum(id, 3, 2) == 0);
  CHECK(extended_sum(one, 5, 2) == -2);
  CHECK(extended_sum(id, 0, 3) == 6);
  auto r = extended_range(5, 2);
  CHECK(r.sign == -1);
  CHECK(r.range.lo == 3);
  CHECK(r.range.hi == 4);
  // telescoping holds for all a, b, c once the convention is used
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        CHECK(extended_sum(id, a, b) + extended_sum(id, b + 1, c) == extended_sum(id, a, c));
      }
    }
  }
}

TEST_CASE("operator construction") {
  Op d1 = Op::forward(2, 1);
  CHECK(d1.terms() == std::map<Point, BigInt>{{{1, 0}, 1}, {{0, 0}, -1}});

  Op e1 = Op::elementary_symmetric(1, {Op::forward(2, 1), Op::forward(2, 2)});
  CHECK(e1.terms() == std::map<Point, BigInt>{{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, -2}});

  Op v = Op::v(2, 1, 2);
  CHECK(v.terms() == std::map<Point, BigInt>{{{0, 1}, 1}, {{-1, 1}, -1}, {{-1, 0}, 1}});

  CHECK(Op::backward(1, 1).terms() == std::map<Point, BigInt>{{{0}, 1}, {{-1}, -1}});
  CHECK((Op::forward(1, 1) - Op::forward(1, 1)).is_zero());
  CHECK(Op::shift(2, 1, 1) * Op::shift(2, 1, -1) == Op::identity(2));
  CHECK(Op::forward(1, 1).pow(2).terms() == std::map<Point, BigInt>{{{2}, 1}, {{1}, -2}, {{0}, 1}});
  CHECK(Op::elementary_symmetric(0, {Op::forward(2, 1)}) == Op::identity(2));
  CHECK(Op::elementary_symmetric(3, {Op::forward(2, 1), Op::forward(2, 2)}).is_zero());

  // V^{-1} truncated at t inverts V up to terms of order t+1 in delta*Delta
  Op prod = Op::v(2, 1, 2) * Op::v_inverse(2, 1, 2, 3);
  Op dd = Op::backward(2, 1) * Op::forward(2, 2);
  CHECK(prod == Op::identity(2) + dd.pow(4) * BigInt(-1));
}

TEST_CASE("operator application") {
  LatticeFunction prod(3, product_formula);
  for (const Point& k : grid_points(3, {-1, 1})) CHECK(apply_operator(Op::identity(3), prod, k) == product_formula(k));

  std::vector<Op> fw{Op::forward(3, 1), Op::forward(3, 2), Op::forward(3, 3)};
  CHECK(apply_operator(Op::elementary_symmetric(2, fw), prod, {0, 0, 0}) == 0);

  for (int n = 1; n <= 4; ++n) {
    for (const auto& ts : sample_tree_sequences(n, 1, 3)) {
      auto counter = std::make_shared<SignedCounter>(ts);
      LatticeFunction L(n, [counter](const Point& k) { return counter->count(k); }, 0, false);
      for (int i = 1; i <= n; ++i) {
        Op op = Op::forward(n, i).pow(n);
        for (const Point& k : grid_points(n, {-1, 1})) CHECK(apply_operator(op, L, k) == 0);
      }
    }
  }
  CHECK_THROWS(apply_operator(Op::identity(2), prod, {0, 0, 0}));
}

TEST_CASE("operator mini-language") {
  std::vector<Op> fw{Op::forward(3, 1), Op::forward(3, 2), Op::forward(3, 3)};
  CHECK(parse_operator("e(2; D k1, D k2, D k3)", 3) == Op::elementary_symmetric(2, fw));
  CHECK(parse_operator("V(k1,k2)", 2) == Op::v(2, 1, 2));
  CHECK(parse_operator("Vinv(k1,k2; trunc=4)", 2) == Op::v_inverse(2, 1, 2, 4));
  CHECK(parse_operator("D^3 k2", 2) == Op::forward(2, 2).pow(3));
  CHECK(parse_operator("E^-1 k1", 2) == Op::shift(2, 1, -1));
  CHECK(parse_operator("d k1 * D k2", 2) == Op::backward(2, 1) * Op::forward(2, 2));
  CHECK(parse_operator("id + 2 (D k1)^2 - D k2", 2) ==
        Op::identity(2) + Op::forward(2, 1).pow(2) * BigInt(2) - Op::forward(2, 2));
  CHECK_THROWS(parse_operator("D k3", 2));
  CHECK_THROWS(parse_operator("V(k1)", 2));
  CHECK_THROWS(parse_operator("D k1 +", 2));
  CHECK_THROWS(parse_operator("Q k1", 2));
  CHECK(std::string(operator_grammar()).find("Vinv") != std::string::npos);
}

TEST_CASE("lattice function memo") {
  std::atomic<int> calls{0};
  LatticeFunction f(1, [&](const Point& k) {
    ++calls;
    return BigInt(k[0] * k[0]);
  });
  CHECK(f({3}) == 9);
  CHECK(f({3}) == 9);
  CHECK(calls == 1);
  CHECK(f.cache_size() == 1);

  LatticeFunction capped(1, [](const Point& k) { return BigInt(k[0]); }, 4);
  for (int x = 0; x < 20; ++x) CHECK(capped({x}) == x);
  CHECK(capped.cache_size() <= 4);

  LatticeFunction plain(1, [](const Point& k) { return BigInt(k[0]); }, 0, false);
  CHECK(plain({2}) == 2);
  CHECK(plain.cache_size() == 0);

  // concurrent evaluation through a shared cache
  LatticeFunction shared(2, product_formula);
  std::vector<std::thread> workers;
  std::atomic<int> bad{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (const Point& k : grid_points(2, {-5, 5})) bad += shared(k) != oracle::product(k);
    });
  }
  for (auto& w : workers) w.join();
  CHECK(bad == 0);
  CHECK(shared.cache_size() == 121);

  LatticeFunction g = swap_arguments(LatticeFunction(2, [](const Point& k) { return BigInt(10 * k[0] + k[1]); }), 1, 2);
  CHECK(g({1, 2}) == 21);
}
