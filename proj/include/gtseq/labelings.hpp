#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gtseq/bigint.hpp"
#include "gtseq/trees.hpp"
#include "gtseq/util.hpp"

namespace gtseq {

// Shifted labelings: vertex i carries the label k_i + i, edge j' carries l_j + j.

struct AdmissibleLabeling {
  Point l;
  std::vector<int> inversions;  // edge names, ascending
  bool operator==(const AdmissibleLabeling&) const = default;
};

/// Per-edge ranges of the shifted edge labels admissible for (T, k).
/// `empty` is set when some edge has equal endpoint labels.
struct EdgeBox {
  std::vector<Range> ranges;
  std::vector<int> inversions;
  bool empty = false;
};
EdgeBox admissible_box(const NTree& t, const Point& k);

/// All admissible labelings, lexicographic in l.
std::vector<AdmissibleLabeling> admissible_labelings(const NTree& t, const Point& k);

struct GTTreeSequence {
  std::vector<Point> levels;                 // levels[i-1] = l_i, levels[n-1] = k
  std::vector<std::vector<int>> inversions;  // inversions[i-1]: inverted edges of T_i
  int sign = 1;
};

/// Streams every Gelfand-Tsetlin tree sequence with bottom level k. Order is
/// lexicographic in (l_{n-1}, l_{n-2}, ..., l_1): the top level varies fastest.
void enumerate_sequences(const TreeSequence& ts, const Point& k,
                         const std::function<void(const GTTreeSequence&)>& visit);
std::vector<GTTreeSequence> all_sequences(const TreeSequence& ts, const Point& k);

/// Memoized signed counts L_m(T_1..T_m, .) for every level m of a tree
/// sequence. Not thread-safe: give each worker its own counter.
class SignedCounter {
 public:
  /// distinct_level d (2 <= d <= n) keeps only labelings whose edge labels on
  /// T_d are pairwise distinct.
  explicit SignedCounter(TreeSequence ts, std::optional<int> distinct_level = std::nullopt);

  BigInt count(const Point& k);                 // level n = k.size()
  BigInt count_level(int m, const Point& k);    // L_m with trees T_1..T_m

  const TreeSequence& trees() const { return ts_; }
  std::size_t memo_size() const;
  /// Once more than `cap` values are stored the memo is dropped and refilled
  /// on demand. 0 means unbounded.
  void set_memo_cap(std::size_t cap) { cap_ = cap; }

 private:
  TreeSequence ts_;
  std::optional<int> distinct_;
  std::size_t cap_ = 0;
  std::size_t stored_ = 0;
  std::vector<int> tree_signs_;
  std::vector<std::unordered_map<Point, BigInt, PointHash>> memo_;
};

BigInt signed_count(const TreeSequence& ts, const Point& k);

/// True when the actual edge labels l_j + j are pairwise distinct.
bool has_distinct_edge_labels(const Point& l);

struct WeakAdmissibleWitness {
  Point l;
  std::map<int, int> assignment;  // r -> edge name i(r)
  std::map<int, int> dominating;  // shared edge -> chosen dominating endpoint
  int sign = 1;                   // excludes sgn T
  bool injective = true;
};

/// Weakly R-admissible labelings of T for k. Each r in R has exactly one
/// incident edge whose label equals its own label; every other edge label lies
/// in [min, max) of its endpoint labels and avoids the labels of endpoints in
/// R. Every choice of dominating endpoints is a separate witness.
std::vector<WeakAdmissibleWitness> weak_r_admissible(const NTree& t, const Point& k,
                                                     const std::vector<int>& r_set);

struct WeakEdgeWitness {
  Point l;
  std::map<int, int> target;  // r (edge name) -> endpoint t(r) whose label it carries
  int sign = 1;               // excludes sgn T
};

/// Weakly R'-edge-admissible labelings: each edge r' in R' carries the label
/// of one of its endpoints; all other edges are ordinarily admissible.
std::vector<WeakEdgeWitness> weak_edge_admissible(const NTree& t, const Point& k,
                                                  const std::vector<int>& edge_set);

enum class RestrictionMode { kVertexSet, kSize, kEdgeSet };

struct RestrictionSpec {
  RestrictionMode mode = RestrictionMode::kVertexSet;
  int level = 1;            // m
  std::vector<int> set;     // R (vertex mode) or R' (edge mode)
  int size = 0;             // rho (size mode)
  std::optional<int> distinct_level;
};

/// Memoized restricted counts L_{n,m,R}, L_{n,m,rho} or L^{R'}_{n,m}.
/// Not thread-safe.
class RestrictedCounter {
 public:
  RestrictedCounter(TreeSequence ts, RestrictionSpec spec);
  BigInt count(const Point& k);

 private:
  BigInt level_value(int j, const Point& k);
  BigInt restricted_level(const Point& k);

  TreeSequence ts_;
  RestrictionSpec spec_;
  SignedCounter lower_;
  std::vector<int> tree_signs_;
  std::vector<std::unordered_map<Point, BigInt, PointHash>> memo_;
};

BigInt signed_count_restricted(const TreeSequence& ts, const Point& k, const RestrictionSpec& spec);

}  // namespace gtseq
