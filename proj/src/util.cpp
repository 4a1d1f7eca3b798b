#include "gtseq/util.hpp"

#include <charconv>
#include <stdexcept>

namespace gtseq {
namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string point_to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::vector<std::vector<int>> subsets_of_size(int n, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = s - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - s + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s <= n; ++s) {
    auto part = subsets_of_size(n, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Point parse_point(const std::string& text) {
  Point p;
  std::size_t start = 0;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece(text.data() + start, (comma == std::string::npos ? text.size() : comma) - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    p.push_back(parse_int(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

Range parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like lo..hi: '" + text + "'");
  Range r{parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
  if (r.empty()) throw std::invalid_argument("empty range: '" + text + "'");
  return r;
}

BigInt binomial(const BigInt& top, int bottom) {
  if (bottom < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int t = 0; t < bottom; ++t) {
    num *= top - t;
    den *= t + 1;
  }
  return num / den;
}

}  // namespace gtseq
