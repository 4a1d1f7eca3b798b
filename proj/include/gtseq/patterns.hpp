#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "gtseq/bigint.hpp"
#include "gtseq/labelings.hpp"

namespace gtseq {

// Patterns use the plain convention: rows[i-1] holds (a_{i,1}, ..., a_{i,i}),
// the last row is the bottom row k. Read as a tree sequence over basic trees,
// row i is exactly the shifted labeling l_i (vertex j carries a_{i,j} + j).

struct GTPattern {
  std::vector<std::vector<int>> rows;
  std::vector<std::pair<int, int>> inversions;  // (i, j) with 1 <= j <= i <= n-1
  int sign = 1;
};

/// Validates the interlacing rules and fills inversions and sign.
/// Throws std::invalid_argument if some entry violates them.
GTPattern make_pattern(std::vector<std::vector<int>> rows);

/// Streams every generalized pattern with the given bottom row. Order is
/// lexicographic in (row n-1, row n-2, ..., row 1).
void enumerate_patterns(const Point& bottom, const std::function<void(const GTPattern&)>& visit);
std::vector<GTPattern> all_patterns(const Point& bottom);

/// Memoized signed count over all patterns with the given bottom row.
BigInt pattern_signed_count(const Point& bottom);

GTTreeSequence pattern_to_tree_sequence(const GTPattern& p);
GTPattern tree_sequence_to_pattern(const GTTreeSequence& s);

struct SSYT {
  std::vector<int> shape;              // weakly decreasing, zeros allowed
  std::vector<std::vector<int>> rows;  // rows[r].size() == shape[r]
  bool operator==(const SSYT&) const = default;
};

bool is_ssyt(const SSYT& t, int max_entry);

/// Every SSYT of the given shape with entries in 1..max_entry, filled cell
/// by cell in row-major order. Independent of the pattern code.
void enumerate_ssyt(const std::vector<int>& shape, int max_entry, const std::function<void(const SSYT&)>& visit);
BigInt count_ssyt(const std::vector<int>& shape, int max_entry);

/// Classical patterns only (no inversions, nonnegative entries); throws otherwise.
SSYT pattern_to_ssyt(const GTPattern& p);
/// Inverse of pattern_to_ssyt for tableaux with entries in 1..n and at most n rows.
GTPattern ssyt_to_pattern(const SSYT& t, int n);

/// Bottom row k with (k_i, k_{i+1}) replaced by (k_{i+1} + 1, k_i - 1).
Point shift_antisym_partner(const Point& k, int i);

/// Splits the patterns with bottom row k by whether the partner row makes the
/// row above contradictory at position i-1, i+1, both, or neither. Returns the
/// signed subtotals as (neither, only i-1, only i+1, both).
std::array<BigInt, 4> shift_antisym_decomposition(const Point& k, int i);

}  // namespace gtseq
