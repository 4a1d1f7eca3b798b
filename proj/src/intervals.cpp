#include "gtseq/intervals.hpp"

#include <algorithm>
#include <iterator>

namespace gtseq {

bool GeneralizedInterval::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool is_inversion(int x, int y) { return y + 1 <= x - 1; }

bool in_interval(int v, int x, int y) {
  if (x <= y) return x <= v && v <= y;
  return y + 1 <= v && v <= x - 1;
}

GeneralizedInterval interval(int x, int y) {
  GeneralizedInterval g;
  g.x = x;
  g.y = y;
  int lo = x, hi = y;
  if (x > y) {
    lo = y + 1;
    hi = x - 1;
    g.inversion = lo <= hi;
  }
  for (int v = lo; v <= hi; ++v) g.members.push_back(v);
  return g;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool are_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace gtseq
