#include "gtseq/grid.hpp"

namespace gtseq {

std::vector<Point> grid_points(int n, Range r) {
  std::vector<Point> out;
  std::vector<Range> box(static_cast<std::size_t>(n), r);
  for_each_in_box(box, [&](const Point& p) { out.push_back(p); });
  return out;
}

}  // namespace gtseq
