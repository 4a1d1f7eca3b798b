#pragma once

#include <vector>

namespace gtseq {

/// The generalized interval [x,y]:
///   x <= y      -> {x,...,y}
///   y == x - 1  -> empty
///   y+1 <= x-1  -> {y+1,...,x-1}, flagged as an inversion
struct GeneralizedInterval {
  int x = 0;
  int y = -1;
  std::vector<int> members;  // sorted
  bool inversion = false;

  bool empty() const { return members.empty(); }
  bool contains(int v) const;
};

GeneralizedInterval interval(int x, int y);

/// Membership test without materializing the set.
bool in_interval(int v, int x, int y);
bool is_inversion(int x, int y);

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);
bool are_disjoint(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace gtseq
