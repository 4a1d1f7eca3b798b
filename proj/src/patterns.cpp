#include "gtseq/patterns.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gtseq/intervals.hpp"

namespace gtseq {
namespace {

// Entries of the row above `below`, one generalized interval per position.
struct RowBox {
  std::vector<Range> ranges;
  int inversions = 0;
  bool empty = false;
};

RowBox row_box(const Point& below) {
  RowBox b;
  for (std::size_t j = 0; j + 1 < below.size(); ++j) {
    const int x = below[j];
    const int y = below[j + 1];
    if (x <= y) {
      b.ranges.push_back({x, y});
    } else {
      b.ranges.push_back({y + 1, x - 1});
      if (y + 1 <= x - 1) ++b.inversions; else b.empty = true;
    }
  }
  return b;
}

BigInt count_rec(const Point& row, std::unordered_map<Point, BigInt, PointHash>& memo) {
  if (row.size() <= 1) return 1;
  if (auto it = memo.find(row); it != memo.end()) return it->second;
  RowBox b = row_box(row);
  BigInt total = 0;
  if (!b.empty) {
    for_each_in_box(b.ranges, [&](const Point& up) { total += count_rec(up, memo); });
    if (b.inversions % 2) total = -total;
  }
  memo.emplace(row, total);
  return total;
}

}  // namespace

GTPattern make_pattern(std::vector<std::vector<int>> rows) {
  GTPattern p;
  const int n = static_cast<int>(rows.size());
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != i) {
      throw std::invalid_argument("pattern row " + std::to_string(i) + " must have " + std::to_string(i) + " entries");
    }
  }
  for (int i = 1; i < n; ++i) {
    const auto& up = rows[static_cast<std::size_t>(i - 1)];
    const auto& down = rows[static_cast<std::size_t>(i)];
    for (int j = 1; j <= i; ++j) {
      const int x = down[static_cast<std::size_t>(j - 1)];
      const int y = down[static_cast<std::size_t>(j)];
      if (!in_interval(up[static_cast<std::size_t>(j - 1)], x, y)) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") violates interlacing");
      }
      if (is_inversion(x, y)) p.inversions.emplace_back(i, j);
    }
  }
  p.rows = std::move(rows);
  p.sign = parity_sign(static_cast<long>(p.inversions.size()));
  return p;
}

void enumerate_patterns(const Point& bottom, const std::function<void(const GTPattern&)>& visit) {
  const std::size_t n = bottom.size();
  if (n == 0) throw std::invalid_argument("bottom row must be nonempty");
  GTPattern cur;
  cur.rows.resize(n);
  cur.rows[n - 1] = bottom;
  std::function<void(std::size_t)> up = [&](std::size_t i) {
    // rows[i] is filled; fill rows[i-1]
    if (i == 0) {
      cur.sign = parity_sign(static_cast<long>(cur.inversions.size()));
      visit(cur);
      return;
    }
    const auto& below = cur.rows[i];
    RowBox b = row_box(below);
    if (b.empty) return;
    const std::size_t mark = cur.inversions.size();
    for (std::size_t j = 0; j + 1 < below.size(); ++j) {
      if (is_inversion(below[j], below[j + 1])) cur.inversions.emplace_back(static_cast<int>(i), static_cast<int>(j) + 1);
    }
    for_each_in_box(b.ranges, [&](const Point& row) {
      cur.rows[i - 1] = row;
      up(i - 1);
    });
    cur.inversions.resize(mark);
  };
  up(n - 1);
}

std::vector<GTPattern> all_patterns(const Point& bottom) {
  std::vector<GTPattern> out;
  enumerate_patterns(bottom, [&](const GTPattern& p) { out.push_back(p); });
  return out;
}

BigInt pattern_signed_count(const Point& bottom) {
  std::unordered_map<Point, BigInt, PointHash> memo;
  return count_rec(bottom, memo);
}

GTTreeSequence pattern_to_tree_sequence(const GTPattern& p) {
  GTTreeSequence s;
  const int n = static_cast<int>(p.rows.size());
  s.levels = p.rows;
  s.inversions.resize(static_cast<std::size_t>(n));
  for (auto [i, j] : p.inversions) s.inversions[static_cast<std::size_t>(i)].push_back(j);
  s.sign = p.sign;  // basic trees have sign +1
  return s;
}

GTPattern tree_sequence_to_pattern(const GTTreeSequence& s) { return make_pattern(s.levels); }

bool is_ssyt(const SSYT& t, int max_entry) {
  if (t.rows.size() != t.shape.size()) return false;
  for (std::size_t r = 0; r < t.shape.size(); ++r) {
    if (t.shape[r] < 0 || static_cast<int>(t.rows[r].size()) != t.shape[r]) return false;
    if (r > 0 && t.shape[r] > t.shape[r - 1]) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v < 1 || v > max_entry) return false;
      if (c > 0 && t.rows[r][c - 1] > v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

void enumerate_ssyt(const std::vector<int>& shape, int max_entry, const std::function<void(const SSYT&)>& visit) {
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] < 0 || (r > 0 && shape[r] > shape[r - 1])) throw std::invalid_argument("shape must be a partition");
  }
  SSYT t;
  t.shape = shape;
  for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == shape.size()) {
      visit(t);
      return;
    }
    if (c == t.rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      t.rows[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
}

BigInt count_ssyt(const std::vector<int>& shape, int max_entry) {
  BigInt c = 0;
  enumerate_ssyt(shape, max_entry, [&](const SSYT&) { c += 1; });
  return c;
}

SSYT pattern_to_ssyt(const GTPattern& p) {
  const int n = static_cast<int>(p.rows.size());
  if (!p.inversions.empty()) throw std::invalid_argument("not a classical pattern: it has inversions");
  for (const auto& row : p.rows) {
    for (int v : row) {
      if (v < 0) throw std::invalid_argument("not a classical pattern: negative entry");
    }
  }
  // lambda^{(i)}_r = a_{i, i+1-r} for r <= i, else 0
  auto part = [&](int i, int r) {
    if (i == 0 || r > i) return 0;
    return p.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - r)];
  };
  SSYT t;
  t.shape.resize(static_cast<std::size_t>(n));
  t.rows.resize(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    t.shape[static_cast<std::size_t>(r - 1)] = part(n, r);
    auto& row = t.rows[static_cast<std::size_t>(r - 1)];
    for (int i = 1; i <= n; ++i) {
      const int cells = part(i, r) - part(i - 1, r);
      row.insert(row.end(), static_cast<std::size_t>(cells), i);
    }
  }
  return t;
}

GTPattern ssyt_to_pattern(const SSYT& t, int n) {
  if (!is_ssyt(t, n)) throw std::invalid_argument("not a semistandard tableau with entries in 1..n");
  if (static_cast<int>(t.rows.size()) > n) {
    for (std::size_t r = static_cast<std::size_t>(n); r < t.rows.size(); ++r) {
      if (!t.rows[r].empty()) throw std::invalid_argument("tableau has more than n nonempty rows");
    }
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= i; ++j) {
      const std::size_t r = static_cast<std::size_t>(i - j);  // tableau row i+1-j, 0-based
      int c = 0;
      if (r < t.rows.size()) {
        for (int v : t.rows[r]) c += v <= i;
      }
      row.push_back(c);
    }
  }
  return make_pattern(std::move(rows));
}

Point shift_antisym_partner(const Point& k, int i) {
  if (i < 1 || i >= static_cast<int>(k.size())) throw std::invalid_argument("index must lie in 1..n-1");
  Point kk = k;
  kk[static_cast<std::size_t>(i - 1)] = k[static_cast<std::size_t>(i)] + 1;
  kk[static_cast<std::size_t>(i)] = k[static_cast<std::size_t>(i - 1)] - 1;
  return kk;
}

std::array<BigInt, 4> shift_antisym_decomposition(const Point& k, int i) {
  const Point kk = shift_antisym_partner(k, i);
  const int n = static_cast<int>(k.size());
  std::array<BigInt, 4> out{0, 0, 0, 0};
  RowBox b = row_box(k);
  if (b.empty) return out;
  std::unordered_map<Point, BigInt, PointHash> memo;
  for_each_in_box(b.ranges, [&](const Point& row) {
    // 0-based: row[i-2] sits between kk[i-2], kk[i-1]; row[i] between kk[i], kk[i+1]
    const bool left = i >= 2 && !in_interval(row[static_cast<std::size_t>(i - 2)], kk[static_cast<std::size_t>(i - 2)],
                                             kk[static_cast<std::size_t>(i - 1)]);
    const bool right = i <= n - 2 && !in_interval(row[static_cast<std::size_t>(i)], kk[static_cast<std::size_t>(i)],
                                                  kk[static_cast<std::size_t>(i + 1)]);
    const int cls = left ? (right ? 3 : 1) : (right ? 2 : 0);
    BigInt c = count_rec(row, memo);
    if (b.inversions % 2) c = -c;
    out[static_cast<std::size_t>(cls)] += c;
  });
  return out;
}

}  // namespace gtseq
