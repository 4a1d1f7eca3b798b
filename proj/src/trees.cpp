#include "gtseq/trees.hpp"

#include "gtseq/bigint.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gtseq {
namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Prufer decoding; returns undirected edges as (smaller, larger) in generation order.
std::vector<Edge> prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<Edge> out;
  if (n == 2) {
    out.push_back({1, 2});
    return out;
  }
  std::vector<int> degree(n + 1, 1);
  for (int v : seq) ++degree[v];
  for (int v : seq) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (degree[leaf] == 1) {
        out.push_back({std::min(leaf, v), std::max(leaf, v)});
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  int u = 0, w = 0;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) (u == 0 ? u : w) = v;
  }
  out.push_back({u, w});
  return out;
}

NTree broom(int m, int s1, int s2) {
  std::vector<int> path;
  for (int v = 1; v <= m; ++v) {
    if (v != s1 && v != s2) path.push_back(v);
  }
  std::vector<Edge> edges;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) edges.push_back({path[t], path[t + 1]});
  edges.push_back({path.back(), s1});
  edges.push_back({path.back(), s2});
  return NTree(m, std::move(edges));
}

NTree path_ending_at(int m, int leaf) {
  std::vector<int> order;
  for (int v = 1; v <= m; ++v) {
    if (v != leaf) order.push_back(v);
  }
  order.push_back(leaf);
  std::vector<Edge> edges;
  for (std::size_t t = 0; t + 1 < order.size(); ++t) edges.push_back({order[t], order[t + 1]});
  return NTree(m, std::move(edges));
}

}  // namespace

NTree::NTree() : n_(1) {}

NTree::NTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("NTree: order must be positive");
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw std::invalid_argument("NTree: expected " + std::to_string(n - 1) + " edges");
  }
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges_) {
    if (e.tail < 1 || e.tail > n || e.head < 1 || e.head > n) {
      throw std::invalid_argument("NTree: edge endpoint out of range");
    }
    if (e.tail == e.head) throw std::invalid_argument("NTree: loop edge");
    int a = find_root(parent, e.tail);
    int b = find_root(parent, e.head);
    if (a == b) throw std::invalid_argument("NTree: edges contain a cycle");
    parent[a] = b;
  }
}

const Edge& NTree::edge(int name) const {
  if (name < 1 || name > n_ - 1) throw std::out_of_range("NTree: unknown edge " + std::to_string(name));
  return edges_[static_cast<std::size_t>(name - 1)];
}

std::vector<int> NTree::incident_edges(int v) const {
  std::vector<int> out;
  for (int j = 1; j < n_; ++j) {
    const Edge& e = edges_[static_cast<std::size_t>(j - 1)];
    if (e.tail == v || e.head == v) out.push_back(j);
  }
  return out;
}

int permutation_sign(std::span<const int> perm) {
  std::vector<int> p(perm.begin(), perm.end());
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i) + 1) {
      std::size_t j = static_cast<std::size_t>(p[i] - 1);
      std::swap(p[i], p[j]);
      sign = -sign;
    }
  }
  return sign;
}

TreeSignData tree_sign(const NTree& t, int root) {
  const int n = t.order();
  if (root < 1 || root > n) throw std::out_of_range("tree_sign: root out of range");
  std::vector<std::vector<int>> adj(n + 1);
  for (int j = 1; j < n; ++j) {
    adj[t.edge(j).tail].push_back(j);
    adj[t.edge(j).head].push_back(j);
  }
  std::vector<int> standard_head(n, 0);
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j : adj[v]) {
      const Edge& e = t.edge(j);
      int other = e.tail == v ? e.head : e.tail;
      if (!seen[other]) {
        seen[other] = true;
        standard_head[j] = other;
        stack.push_back(other);
      }
    }
  }

  TreeSignData d;
  d.root = root;
  d.permutation.push_back(root);
  for (int j = 1; j < n; ++j) {
    d.permutation.push_back(standard_head[j]);
    if (t.edge(j).head != standard_head[j]) d.reversed_edges.push_back(j);
  }
  d.sign = parity_sign(static_cast<long>(d.reversed_edges.size())) * permutation_sign(d.permutation);
  return d;
}

NTree reverse_edge(const NTree& t, int j) {
  auto edges = t.edges();
  const Edge& e = t.edge(j);
  edges[static_cast<std::size_t>(j - 1)] = {e.head, e.tail};
  return NTree(t.order(), std::move(edges));
}

NTree slide_edge(const NTree& t, int i, int j) {
  if (i == j) throw std::invalid_argument("slide_edge: an edge cannot slide along itself");
  const Edge ei = t.edge(i);
  const Edge ej = t.edge(j);
  int q = 0;
  for (int v : {ei.tail, ei.head}) {
    if (v == ej.tail || v == ej.head) q = v;
  }
  if (q == 0) throw std::invalid_argument("slide_edge: edges are not adjacent");
  const int r = ej.tail == q ? ej.head : ej.tail;
  auto edges = t.edges();
  Edge& moved = edges[static_cast<std::size_t>(i - 1)];
  if (moved.tail == q) moved.tail = r; else moved.head = r;
  return NTree(t.order(), std::move(edges));
}

NTree interchange_edges(const NTree& t, int x, int y) {
  if (x == y) throw std::invalid_argument("interchange_edges: identical edges");
  const Edge ex = t.edge(x);
  const Edge ey = t.edge(y);
  int b = 0;
  for (int v : {ex.tail, ex.head}) {
    if (v == ey.tail || v == ey.head) b = v;
  }
  if (b == 0) throw std::invalid_argument("interchange_edges: edges are not adjacent");

  // Normalize to x' = (a,b), y' = (b,c).
  NTree cur = t;
  const bool flip_x = ex.head != b;
  const bool flip_y = ey.tail != b;
  if (flip_x) cur = reverse_edge(cur, x);
  if (flip_y) cur = reverse_edge(cur, y);

  cur = slide_edge(cur, x, y);  // x' = (a,c)
  cur = slide_edge(cur, y, x);  // y' = (b,a)
  cur = slide_edge(cur, x, y);  // x' = (b,c)
  cur = reverse_edge(cur, y);   // y' = (a,b)

  // Restore the original orientations, now carried by the swapped names.
  if (flip_x) cur = reverse_edge(cur, y);
  if (flip_y) cur = reverse_edge(cur, x);
  return cur;
}

NTree swap_vertices(const NTree& t, int a, int b) {
  int x = 0;
  for (int j = 1; j < t.order(); ++j) {
    const Edge& e = t.edge(j);
    if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) x = j;
  }
  if (x == 0) throw std::invalid_argument("swap_vertices: vertices are not adjacent");
  std::vector<int> at_a, at_b;
  for (int j : t.incident_edges(a)) {
    if (j != x) at_a.push_back(j);
  }
  for (int j : t.incident_edges(b)) {
    if (j != x) at_b.push_back(j);
  }
  NTree cur = reverse_edge(t, x);
  for (int j : at_a) cur = slide_edge(cur, j, x);
  for (int j : at_b) cur = slide_edge(cur, j, x);
  return cur;
}

NTree basic_tree(int n) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) edges.push_back({j, j + 1});
  return NTree(n, std::move(edges));
}

NTree random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: order must be positive");
  if (n == 1) return NTree();
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  std::uniform_int_distribution<int> vertex(1, n);
  for (int& v : seq) v = vertex(rng);
  auto edges = prufer_decode(n, seq);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (Edge& e : edges) {
    if (coin(rng)) std::swap(e.tail, e.head);
  }
  return NTree(n, std::move(edges));
}

std::vector<NTree> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("all_trees: order must be positive");
  if (n == 1) return {NTree()};
  std::vector<NTree> out;
  const int len = n - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 1);
  while (true) {
    auto shape = prufer_decode(n, seq);
    std::vector<int> naming(shape.size());
    std::iota(naming.begin(), naming.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << shape.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t j = 0; j < shape.size(); ++j) {
          Edge e = shape[static_cast<std::size_t>(naming[j])];
          if (mask & (1u << j)) std::swap(e.tail, e.head);
          edges.push_back(e);
        }
        out.emplace_back(n, std::move(edges));
      }
    } while (std::next_permutation(naming.begin(), naming.end()));

    int pos = len - 1;
    while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n) {
      seq[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++seq[static_cast<std::size_t>(pos)];
  }
  return out;
}

TreeSequence::TreeSequence(std::vector<NTree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw std::invalid_argument("TreeSequence: order must be positive");
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (trees_[i].order() != static_cast<int>(i) + 1) {
      throw std::invalid_argument("TreeSequence: member " + std::to_string(i + 1) + " has wrong order");
    }
  }
}

TreeSequence TreeSequence::with_tree(int i, NTree t) const {
  auto trees = trees_;
  trees.at(static_cast<std::size_t>(i - 1)) = std::move(t);
  return TreeSequence(std::move(trees));
}

int TreeSequence::sign() const {
  int s = 1;
  for (const NTree& t : trees_) s *= tree_sign(t).sign;
  return s;
}

TreeSequence canonical_trees(TreeFamily kind, int n, const CanonicalParams& params) {
  if (n < 1) throw std::invalid_argument("canonical_trees: order must be positive");
  std::vector<NTree> trees;
  switch (kind) {
    case TreeFamily::kBasic:
      for (int m = 1; m <= n; ++m) trees.push_back(basic_tree(m));
      break;
    case TreeFamily::kSwap: {
      if (n < 2 || params.i < 1 || params.i >= params.j || params.j > n) {
        throw std::invalid_argument("canonical_trees(swap): need 1 <= i < j <= n, n >= 2");
      }
      trees.resize(static_cast<std::size_t>(n));
      int s1 = params.i, s2 = params.j;
      for (int m = n; m >= 3; --m) {
        trees[static_cast<std::size_t>(m - 1)] = broom(m, s1, s2);
        s1 = m - 2;
        s2 = m - 1;
      }
      trees[1] = basic_tree(2);
      break;
    }
    case TreeFamily::kLeafChain: {
      if (params.i < 1 || params.i > n) throw std::invalid_argument("canonical_trees(leafchain): need 1 <= i <= n");
      int leaf = params.i;
      trees.resize(static_cast<std::size_t>(n));
      for (int m = n; m >= 1; --m) {
        trees[static_cast<std::size_t>(m - 1)] = path_ending_at(m, leaf);
        leaf = m - 1;
      }
      break;
    }
    case TreeFamily::kRandom: {
      std::mt19937_64 rng(params.seed);
      for (int m = 1; m <= n; ++m) trees.push_back(random_tree(m, rng));
      break;
    }
  }
  return TreeSequence(std::move(trees));
}

TreeFamily parse_tree_family(const std::string& name) {
  if (name == "basic") return TreeFamily::kBasic;
  if (name == "swap") return TreeFamily::kSwap;
  if (name == "leafchain") return TreeFamily::kLeafChain;
  if (name == "random") return TreeFamily::kRandom;
  throw std::invalid_argument("unknown tree family: " + name);
}

std::string to_string(TreeFamily kind) {
  switch (kind) {
    case TreeFamily::kBasic: return "basic";
    case TreeFamily::kSwap: return "swap";
    case TreeFamily::kLeafChain: return "leafchain";
    case TreeFamily::kRandom: return "random";
  }
  return "?";
}

}  // namespace gtseq
