#pragma once

#include <functional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "gtseq/bigint.hpp"

namespace gtseq {

/// Inclusive integer range; lo > hi means empty.
struct Range {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
};

/// Visits every point of the box r[0] x r[1] x ... in lexicographic order
/// (last coordinate fastest). Nothing is visited if any range is empty.
/// Stops early when f returns false.
template <class F>
void for_each_in_box(const std::vector<Range>& r, F&& f) {
  for (const Range& x : r) {
    if (x.empty()) return;
  }
  Point p(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) p[i] = r[i].lo;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(p)), bool>) {
      if (!f(static_cast<const Point&>(p))) return;
    } else {
      f(static_cast<const Point&>(p));
    }
    std::size_t i = r.size();
    while (i > 0) {
      --i;
      if (p[i] < r[i].hi) {
        ++p[i];
        break;
      }
      p[i] = r[i].lo;
      if (i == 0) return;
    }
    if (r.empty()) return;
  }
}

/// All subsets of {1..n} of size s, each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int s);
/// All subsets of {1..n}, ordered by size then lexicographically.
std::vector<std::vector<int>> all_subsets(int n);

/// Parses "a,b,c" into integers; throws std::invalid_argument on bad input.
Point parse_point(const std::string& text);

/// Parses "lo..hi" (either bound may be negative).
Range parse_range(const std::string& text);

BigInt binomial(const BigInt& top, int bottom);

}  // namespace gtseq
