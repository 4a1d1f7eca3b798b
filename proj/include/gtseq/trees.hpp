#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace gtseq {

struct Edge {
  int tail = 0;
  int head = 0;
  bool operator==(const Edge&) const = default;
};

/// A directed tree on vertices 1..n with edges named 1'..(n-1)'.
/// edges()[j-1] is edge j'. Construction validates the tree invariants.
class NTree {
 public:
  NTree();  // the single-vertex tree
  NTree(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int name) const;

  /// Names of the edges incident with vertex v, ascending.
  std::vector<int> incident_edges(int v) const;

  bool operator==(const NTree&) const = default;
  auto operator<=>(const NTree& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (auto c = edges_[i].tail <=> o.edges_[i].tail; c != 0) return c;
      if (auto c = edges_[i].head <=> o.edges_[i].head; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

struct TreeSignData {
  int root = 1;
  std::vector<int> permutation;     // root, then standard-orientation heads by edge name
  std::vector<int> reversed_edges;  // ascending edge names
  int sign = 1;
};

/// Sign of a permutation of {1..n} given in one-line notation.
int permutation_sign(std::span<const int> perm);

TreeSignData tree_sign(const NTree& t, int root = 1);

NTree reverse_edge(const NTree& t, int j);

/// Slide edge i' along edge j'. The shared endpoint q of i' is replaced by
/// the endpoint of j' other than q; the orientation relative to the fixed
/// endpoint is kept. Throws if the edges are equal or not adjacent.
NTree slide_edge(const NTree& t, int i, int j);

/// Exchange the names of two adjacent edges using three slides and one
/// reversal (plus orientation normalizing reversals). Flips the sign.
NTree interchange_edges(const NTree& t, int x, int y);

/// Exchange the names of two adjacent vertices using one reversal and slides.
/// Flips the sign.
NTree swap_vertices(const NTree& t, int a, int b);

/// Path with j' = (j, j+1).
NTree basic_tree(int n);

/// Uniform labeled tree from a Prufer sequence, uniform orientations and a
/// uniform edge naming.
NTree random_tree(int n, std::mt19937_64& rng);

/// Every n-tree (shape x orientation x edge naming). n^(n-2) 2^(n-1) (n-1)! trees.
std::vector<NTree> all_trees(int n);

class TreeSequence {
 public:
  TreeSequence() = default;
  explicit TreeSequence(std::vector<NTree> trees);

  int order() const { return static_cast<int>(trees_.size()); }
  /// T_i, 1-based.
  const NTree& tree(int i) const { return trees_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<NTree>& trees() const { return trees_; }

  /// Same sequence with T_i replaced.
  TreeSequence with_tree(int i, NTree t) const;

  int sign() const;

  bool operator==(const TreeSequence&) const = default;

 private:
  std::vector<NTree> trees_;
};

enum class TreeFamily { kBasic, kSwap, kLeafChain, kRandom };

struct CanonicalParams {
  int i = 0;  // swap: first sink; leafchain: designated leaf
  int j = 0;  // swap: second sink
  std::uint64_t seed = 0;
};

/// basic: (B_1..B_n).
/// swap: S^{i,j}_n. Each T_m (m>=3) is a broom: a directed path through the
///   non-sink vertices in increasing order, whose last vertex points at the two
///   sinks. Path edges take the lowest names; the sink edges take m-2 and m-1,
///   which become the sinks of T_{m-1}. T_2 is the edge 1' = (1,2).
/// leafchain: R_{n,i}. Each R_m is a directed path ending in its designated
///   sink leaf i_m (i_n = i); the sink edge is named m-1, so i_{m-1} = m-1.
/// random: each T_m from random_tree, seeded deterministically.
TreeSequence canonical_trees(TreeFamily kind, int n, const CanonicalParams& params = {});

TreeFamily parse_tree_family(const std::string& name);
std::string to_string(TreeFamily kind);

}  // namespace gtseq
