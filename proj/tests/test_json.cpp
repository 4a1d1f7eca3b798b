#include <doctest.h>

#include "gtseq/json_io.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/paths.hpp"

using namespace gtseq;

TEST_CASE("tree JSON round trip") {
  NTree t(3, {{2, 1}, {2, 3}});
  Json j = to_json(t);
  CHECK(j.dump() == R"({"n":3,"edges":[{"id":1,"tail":2,"head":1},{"id":2,"tail":2,"head":3}]})");
  CHECK(tree_from_json(j) == t);

  auto ts = canonical_trees(TreeFamily::kRandom, 4, {0, 0, 5});
  Json js = to_json(ts);
  CHECK(js["order"] == 4);
  CHECK(tree_sequence_from_json(js) == ts);

  CHECK_THROWS(tree_from_json(Json::parse(R"({"n":2,"edges":[{"id":2,"tail":1,"head":2}]})")));
  CHECK_THROWS(tree_from_json(Json::parse(R"({"n":3,"edges":[{"id":1,"tail":1,"head":2},{"id":2,"tail":1,"head":2}]})")));
}

TEST_CASE("DOT output") {
  const std::string dot = tree_to_dot(basic_tree(3), "B3");
  CHECK(dot.find("digraph B3") != std::string::npos);
  CHECK(dot.find("1 -> 2") != std::string::npos);
  CHECK(dot.find("label=\"2'\"") != std::string::npos);
}

TEST_CASE("sequence and pattern JSON") {
  auto seqs = all_sequences(canonical_trees(TreeFamily::kBasic, 2), {3, 0});
  Json j = to_json(seqs[0]);
  CHECK(j.dump() == R"({"levels":[[1],[3,0]],"inversions":[[],[1]],"sign":-1})");
  GTTreeSequence back = gt_sequence_from_json(j);
  CHECK(back.levels == seqs[0].levels);
  CHECK(back.sign == -1);

  GTPattern p = make_pattern({{1}, {2, 0}});
  Json pj = to_json(p);
  CHECK(pj.dump() == R"({"rows":[[1],[2,0]],"sign":-1})");
  CHECK(pattern_from_json(pj).rows == p.rows);
  pj["sign"] = 1;
  CHECK_THROWS(pattern_from_json(pj));

  SSYT t{{2, 1}, {{1, 1}, {2}}};
  CHECK(ssyt_from_json(to_json(t)) == t);
  CHECK(to_json(t).dump() == R"({"shape":[2,1],"rows":[[1,1],[2]]})");
}

TEST_CASE("path family and violation JSON") {
  auto f = nonintersecting_families({0, 1}).front();
  Json j = to_json(f);
  CHECK(j["pi"] == Json::array({1, 2}));
  CHECK(j["sign"] == 1);
  CHECK(j["paths"][0] == Json::array({"E"}));

  Json v = to_json(Violation{{1, 2}, "demo", BigInt(3), BigInt(-4)});
  CHECK(v.dump() == R"({"point":[1,2],"what":"demo","lhs":"3","rhs":"-4"})");

  bool any = false;
  enumerate_extension(Extension::kFourth, {0}, [&](const ExtTriangle& t) {
    Json e = to_json(t);
    any = true;
    CHECK(e.contains("rows"));
    CHECK(e.contains("sign"));
  });
  CHECK(any);
}
