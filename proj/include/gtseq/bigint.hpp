#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gtseq {

/// Exact integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

/// A point of Z^n, also used for shifted labelings.
using Point = std::vector<int>;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// (-1)^e as an int.
constexpr int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ p.size();
    for (int v : p) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::string point_to_string(const Point& p);

}  // namespace gtseq
