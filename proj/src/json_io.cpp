#include "gtseq/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace gtseq {

Json to_json(const NTree& t) {
  Json edges = Json::array();
  for (int j = 1; j < t.order(); ++j) {
    edges.push_back({{"id", j}, {"tail", t.edge(j).tail}, {"head", t.edge(j).head}});
  }
  return {{"n", t.order()}, {"edges", edges}};
}

NTree tree_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::vector<bool> seen(edges.size(), false);
  for (const auto& e : j.at("edges")) {
    const int id = e.at("id").get<int>();
    if (id < 1 || id > n - 1 || seen[static_cast<std::size_t>(id - 1)]) {
      throw std::invalid_argument("edge ids must be exactly 1..n-1");
    }
    seen[static_cast<std::size_t>(id - 1)] = true;
    edges[static_cast<std::size_t>(id - 1)] = {e.at("tail").get<int>(), e.at("head").get<int>()};
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("edge ids must be exactly 1..n-1");
  }
  return NTree(n, std::move(edges));
}

Json to_json(const TreeSequence& s) {
  Json trees = Json::array();
  for (const auto& t : s.trees()) trees.push_back(to_json(t));
  return {{"order", s.order()}, {"trees", trees}};
}

TreeSequence tree_sequence_from_json(const Json& j) {
  std::vector<NTree> trees;
  for (const auto& t : j.at("trees")) trees.push_back(tree_from_json(t));
  TreeSequence s(std::move(trees));
  if (j.contains("order") && j.at("order").get<int>() != s.order()) {
    throw std::invalid_argument("order field does not match the number of trees");
  }
  return s;
}

std::string tree_to_dot(const NTree& t, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 1; v <= t.order(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (int j = 1; j < t.order(); ++j) {
    out << "  " << t.edge(j).tail << " -> " << t.edge(j).head << " [label=\"" << j << "'\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const GTTreeSequence& s) {
  return {{"levels", s.levels}, {"inversions", s.inversions}, {"sign", s.sign}};
}

GTTreeSequence gt_sequence_from_json(const Json& j) {
  GTTreeSequence s;
  s.levels = j.at("levels").get<std::vector<Point>>();
  if (j.contains("inversions")) s.inversions = j.at("inversions").get<std::vector<std::vector<int>>>();
  s.sign = j.value("sign", 1);
  return s;
}

Json to_json(const GTPattern& p) { return {{"rows", p.rows}, {"sign", p.sign}}; }

GTPattern pattern_from_json(const Json& j) {
  GTPattern p = make_pattern(j.at("rows").get<std::vector<std::vector<int>>>());
  if (j.contains("sign") && j.at("sign").get<int>() != p.sign) {
    throw std::invalid_argument("pattern sign field does not match its inversions");
  }
  return p;
}

Json to_json(const SSYT& t) { return {{"shape", t.shape}, {"rows", t.rows}}; }

SSYT ssyt_from_json(const Json& j) {
  SSYT t;
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  if (j.contains("shape")) {
    t.shape = j.at("shape").get<std::vector<int>>();
  } else {
    for (const auto& r : t.rows) t.shape.push_back(static_cast<int>(r.size()));
  }
  return t;
}

Json to_json(const PathFamily& f) {
  Json paths = Json::array();
  for (const auto& p : f.paths) {
    Json steps = Json::array();
    for (Step s : p.steps) steps.push_back(step_name(s));
    paths.push_back(steps);
  }
  return {{"pi", f.pi}, {"paths", paths}, {"sign", f.sign}};
}

Json to_json(const ExtTriangle& t) {
  std::vector<std::vector<int>> marks;
  for (const auto& row : t.marks) marks.emplace_back(row.begin(), row.end());
  return {{"rows", t.rows}, {"marks", marks}, {"inversions", t.inversions}, {"sign", t.sign}};
}

Json to_json(const Violation& v) {
  return {{"point", v.point}, {"what", v.what}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}};
}

}  // namespace gtseq
