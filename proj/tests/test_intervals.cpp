#include <doctest.h>

#include "gtseq/intervals.hpp"

using namespace gtseq;

TEST_CASE("generalized interval conventions") {
  auto a = interval(3, 5);
  CHECK(a.members == std::vector<int>{3, 4, 5});
  CHECK_FALSE(a.inversion);

  auto b = interval(3, 2);
  CHECK(b.empty());
  CHECK_FALSE(b.inversion);

  auto c = interval(5, 2);
  CHECK(c.members == std::vector<int>{3, 4});
  CHECK(c.inversion);

  CHECK(in_interval(4, 5, 2));
  CHECK_FALSE(in_interval(5, 5, 2));
  CHECK(is_inversion(5, 2));
  CHECK_FALSE(is_inversion(2, 5));
}

TEST_CASE("set helpers") {
  CHECK(symmetric_difference({1, 2, 3}, {2, 3, 4}) == std::vector<int>{1, 4});
  CHECK(set_difference({1, 2, 3}, {2}) == std::vector<int>{1, 3});
  CHECK(is_subset({2, 3}, {1, 2, 3}));
  CHECK_FALSE(is_subset({0}, {1, 2}));
  CHECK(are_disjoint({1, 2}, {3}));
  CHECK(are_disjoint({}, {}));
}

TEST_CASE("symmetric difference identities hold on the cube") {
  for (int x = -5; x <= 5; ++x) {
    for (int y = -5; y <= 5; ++y) {
      for (int z = -5; z <= 5; ++z) {
        const auto A = interval(x, y), B = interval(x, z + 1);
        REQUIRE(symmetric_difference(A.members, B.members) == interval(y + 1, z + 1).members);
        const bool one = A.inversion != B.inversion;
        const bool disjoint = are_disjoint(A.members, B.members);
        if (one) CHECK(disjoint);
        if (!A.empty() && !B.empty() && disjoint) CHECK(one);
        CHECK((disjoint || is_subset(A.members, B.members) || is_subset(B.members, A.members)));

        const auto D = interval(z, x), E = interval(y - 1, x);
        REQUIRE(symmetric_difference(D.members, E.members) == interval(y - 1, z - 1).members);
        if (!D.empty() && !E.empty()) {
          const bool both = !set_difference(D.members, E.members).empty() &&
                            !set_difference(E.members, D.members).empty();
          CHECK(both == (D.inversion != E.inversion));
        }
      }
    }
  }
}
