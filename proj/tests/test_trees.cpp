#include <doctest.h>

#include <random>
#include <set>

#include "gtseq/trees.hpp"

using namespace gtseq;

namespace {

bool adjacent(const NTree& t, int i, int j) {
  const Edge a = t.edge(i), b = t.edge(j);
  return a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head;
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_NOTHROW(NTree(3, {{1, 2}, {2, 3}}));
  CHECK_THROWS(NTree(3, {{1, 2}}));               // too few edges
  CHECK_THROWS(NTree(3, {{1, 2}, {2, 1}}));       // cycle, vertex 3 missing
  CHECK_THROWS(NTree(2, {{1, 1}}));               // loop
  CHECK_THROWS(NTree(3, {{1, 2}, {2, 4}}));       // vertex out of range
  CHECK(NTree().order() == 1);
  CHECK(NTree(3, {{1, 2}, {3, 2}}).incident_edges(2) == std::vector<int>{1, 2});
}

TEST_CASE("tree sign examples") {
  CHECK(tree_sign(basic_tree(4)).sign == 1);
  CHECK(tree_sign(NTree()).sign == 1);
  const std::vector<int> pi{2, 3, 1, 7, 8, 5, 4, 6};
  CHECK(permutation_sign(pi) == -1);

  // An 8-tree rooted at 2 whose standard heads are 3 1 7 8 5 4 6 and whose
  // reversed edges are 3', 4', 7'.
  NTree t(8, {{2, 3}, {2, 1}, {7, 3}, {8, 3}, {1, 5}, {5, 4}, {6, 4}});
  auto d = tree_sign(t, 2);
  CHECK(d.permutation == pi);
  CHECK(d.reversed_edges == std::vector<int>{3, 4, 7});
  CHECK(d.sign == 1);
  for (int r = 1; r <= 8; ++r) CHECK(tree_sign(t, r).sign == 1);
}

TEST_CASE("reverse_edge") {
  NTree b2 = basic_tree(2);
  NTree r = reverse_edge(b2, 1);
  CHECK(r.edge(1) == Edge{2, 1});
  CHECK(tree_sign(b2).sign == 1);
  CHECK(tree_sign(r).sign == -1);
  CHECK(reverse_edge(r, 1) == b2);
  CHECK(tree_sign(reverse_edge(basic_tree(3), 2)).sign == -1);
  CHECK_THROWS(reverse_edge(b2, 2));
}

TEST_CASE("slide_edge") {
  NTree b3 = basic_tree(3);
  NTree s = slide_edge(b3, 1, 2);
  CHECK(s.edge(1) == Edge{1, 3});
  CHECK(s.edge(2) == Edge{2, 3});
  CHECK(tree_sign(s).sign == 1);
  CHECK(slide_edge(s, 1, 2) == b3);
  CHECK_THROWS(slide_edge(b3, 1, 1));
  CHECK_THROWS(slide_edge(basic_tree(4), 1, 3));
}

TEST_CASE("edge interchange on a 3-vertex tree") {
  NTree t = interchange_edges(basic_tree(3), 1, 2);
  CHECK(t.edge(1) == Edge{2, 3});
  CHECK(t.edge(2) == Edge{1, 2});
  CHECK(tree_sign(t).sign == -1);
}

TEST_CASE("sign behaviour on random trees") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      NTree t = random_tree(n, rng);
      const int s = tree_sign(t).sign;
      for (int root = 1; root <= n; ++root) CHECK(tree_sign(t, root).sign == s);
      for (int j = 1; j < n; ++j) {
        CHECK(tree_sign(reverse_edge(t, j)).sign == -s);
        const Edge e = t.edge(j);
        CHECK(tree_sign(swap_vertices(t, e.tail, e.head)).sign == -s);
        for (int i = 1; i < n; ++i) {
          if (i == j || !adjacent(t, i, j)) continue;
          CHECK(tree_sign(slide_edge(t, i, j)).sign == s);
          NTree x = interchange_edges(t, i, j);
          CHECK(tree_sign(x).sign == -s);
          CHECK(x.edge(i) == t.edge(j));
          CHECK(x.edge(j) == t.edge(i));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("vertex swap exchanges the names") {
  NTree t(3, {{1, 2}, {2, 3}});
  NTree s = swap_vertices(t, 1, 2);
  // same shape with 1 and 2 renamed: the edge between them stays, 3 hangs off 1
  std::set<std::pair<int, int>> und;
  for (const auto& e : s.edges()) und.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  CHECK(und == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});
  CHECK(tree_sign(s).sign == -1);
}

TEST_CASE("all_trees counts") {
  CHECK(all_trees(1).size() == 1);
  CHECK(all_trees(2).size() == 2);
  CHECK(all_trees(3).size() == 3 * 4 * 2);
  CHECK(all_trees(4).size() == 16 * 8 * 6);
  auto t4 = all_trees(4);
  CHECK(std::set<NTree>(t4.begin(), t4.end()).size() == t4.size());
}

TEST_CASE("canonical tree sequences") {
  auto basic = canonical_trees(TreeFamily::kBasic, 3);
  CHECK(basic.order() == 3);
  CHECK(basic.tree(3).edges() == std::vector<Edge>{{1, 2}, {2, 3}});

  auto sw = canonical_trees(TreeFamily::kSwap, 2, {1, 2, 0});
  CHECK(sw.tree(2).order() == 2);
  CHECK(sw.tree(2).edges().size() == 1);

  auto sw5 = canonical_trees(TreeFamily::kSwap, 5, {2, 4, 0});
  // both sinks of T_5 are leaves fed by the same vertex
  const NTree& t5 = sw5.tree(5);
  int into2 = 0, into4 = 0, tail2 = 0, tail4 = 0;
  for (const auto& e : t5.edges()) {
    if (e.head == 2) ++into2, tail2 = e.tail;
    if (e.head == 4) ++into4, tail4 = e.tail;
    CHECK(e.tail != 2);
    CHECK(e.tail != 4);
  }
  CHECK(into2 == 1);
  CHECK(into4 == 1);
  CHECK(tail2 == tail4);

  auto lc = canonical_trees(TreeFamily::kLeafChain, 4, {2, 0, 0});
  for (int m = 2; m <= 4; ++m) {
    const int leaf = m == 4 ? 2 : m;  // i_{m} = m for m < n
    const auto inc = lc.tree(m).incident_edges(leaf);
    REQUIRE(inc.size() == 1);
    CHECK(inc[0] == m - 1);
    CHECK(lc.tree(m).edge(m - 1).head == leaf);
  }

  auto r1 = canonical_trees(TreeFamily::kRandom, 4, {0, 0, 7});
  auto r2 = canonical_trees(TreeFamily::kRandom, 4, {0, 0, 7});
  CHECK(r1 == r2);
  for (int m = 1; m <= 4; ++m) CHECK(r1.tree(m).order() == m);

  CHECK_THROWS(canonical_trees(TreeFamily::kSwap, 3, {2, 2, 0}));
  CHECK_THROWS(canonical_trees(TreeFamily::kSwap, 3, {1, 4, 0}));
  CHECK_THROWS(canonical_trees(TreeFamily::kLeafChain, 3, {0, 0, 0}));
  CHECK_THROWS(parse_tree_family("star"));
}

TEST_CASE("tree sequence validation") {
  CHECK_THROWS(TreeSequence({basic_tree(2)}));
  CHECK_THROWS(TreeSequence(std::vector<NTree>{}));
  auto ts = canonical_trees(TreeFamily::kBasic, 3);
  CHECK(ts.with_tree(3, reverse_edge(ts.tree(3), 1)).sign() == -ts.sign());
}
