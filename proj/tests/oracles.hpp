#pragma once

// Reference implementations written straight from the definitions. They share
// no code with the library beyond the data types, and they are slow on purpose.

#include <boost/rational.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "gtseq/bigint.hpp"
#include "gtseq/trees.hpp"

namespace oracle {

using gtseq::BigInt;
using gtseq::Point;
using Rational = boost::rational<BigInt>;

// boost::rational over cpp_int rejects negative denominators, so normalize first.
inline Rational frac(long num, long den) { return den < 0 ? Rational(-num, -den) : Rational(num, den); }

inline BigInt to_int(const Rational& r) {
  if (r.denominator() != 1) throw std::logic_error("oracle: value is not an integer");
  return r.numerator();
}

inline BigInt product(const Point& k) {
  Rational p = 1;
  const int n = static_cast<int>(k.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) p *= frac(k[j] - k[i] + j - i, j - i);
  }
  return to_int(p);
}

// x(x-1)...(x-m+1)/m! for any integer x.
inline Rational binom(long x, int m) {
  Rational r = 1;
  for (int t = 0; t < m; ++t) r *= frac(x - t, t + 1);
  return r;
}

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

// Leibniz expansion of det(binom(k_j + j - 1, i - 1)).
inline BigInt determinant(const Point& k) {
  const int n = static_cast<int>(k.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = perm_sign(p);
    for (int i = 0; i < n; ++i) term *= binom(k[p[i]] + p[i], i);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return to_int(total);
}

// Checks the admissibility definition for one edge and reports inversions.
inline bool edge_ok(long lp, long lq, long e, bool& inverted) {
  if (lp == lq) return false;
  inverted = lp > lq;
  return std::min(lp, lq) <= e && e < std::max(lp, lq);
}

// Sum over all GT tree sequences, scanning every edge label in a fixed window
// and testing the definition literally.
inline BigInt signed_count(const gtseq::TreeSequence& ts, const Point& k) {
  const int n = static_cast<int>(k.size());
  std::function<BigInt(int, const Point&)> level = [&](int m, const Point& lab) -> BigInt {
    if (m == 1) return 1;
    const gtseq::NTree& t = ts.tree(m);
    long lo = 0, hi = 0;
    for (int v = 1; v <= m; ++v) {
      const long a = lab[v - 1] + v;
      lo = v == 1 ? a : std::min(lo, a);
      hi = v == 1 ? a : std::max(hi, a);
    }
    BigInt total = 0;
    Point l(static_cast<std::size_t>(m - 1));
    std::function<void(int, int)> rec = [&](int j, int inv) {
      if (j == m) {
        total += (inv % 2 ? -1 : 1) * level(m - 1, l);
        return;
      }
      const gtseq::Edge e = t.edge(j);
      for (long x = lo - 1; x <= hi; ++x) {
        bool inverted = false;
        if (!edge_ok(lab[e.tail - 1] + e.tail, lab[e.head - 1] + e.head, x, inverted)) continue;
        l[j - 1] = static_cast<int>(x - j);
        rec(j + 1, inv + (inverted ? 1 : 0));
      }
    };
    rec(1, 0);
    return gtseq::tree_sign(t).sign * total;
  };
  return level(n, k);
}

// Patterns by scanning a box for every entry and checking the betweenness rule.
inline BigInt pattern_count(const Point& bottom) {
  const int n = static_cast<int>(bottom.size());
  const int lo = *std::min_element(bottom.begin(), bottom.end()) - 1;
  const int hi = *std::max_element(bottom.begin(), bottom.end()) + 1;
  std::function<BigInt(const Point&)> rec = [&](const Point& row) -> BigInt {
    if (row.size() == 1) return 1;
    BigInt total = 0;
    Point up(row.size() - 1);
    std::function<void(std::size_t, int)> fill = [&](std::size_t j, int inv) {
      if (j == up.size()) {
        total += (inv % 2 ? -1 : 1) * rec(up);
        return;
      }
      const int a = row[j], b = row[j + 1];
      for (int x = lo; x <= hi; ++x) {
        if (a <= b && a <= x && x <= b) {
          up[j] = x;
          fill(j + 1, inv);
        } else if (a > b && a > x && x > b) {
          up[j] = x;
          fill(j + 1, inv + 1);
        }
      }
    };
    fill(0, 0);
    return total;
  };
  (void)n;
  return rec(bottom);
}

// Monotone triangles (strictly increasing rows, interlacing) by box scan.
inline BigInt monotone_triangles(const Point& bottom) {
  std::function<BigInt(const Point&)> rec = [&](const Point& row) -> BigInt {
    if (row.size() == 1) return 1;
    BigInt total = 0;
    Point up(row.size() - 1);
    std::function<void(std::size_t)> fill = [&](std::size_t j) {
      if (j == up.size()) {
        total += rec(up);
        return;
      }
      for (int x = row[j]; x <= row[j + 1]; ++x) {
        if (j > 0 && x <= up[j - 1]) continue;
        up[j] = x;
        fill(j + 1);
      }
    };
    fill(0);
    return total;
  };
  return rec(bottom);
}

// alpha as the polynomial of degree < n in each variable that counts monotone
// triangles: tensor Lagrange interpolation on disjoint blocks of strictly
// increasing nodes, evaluated anywhere.
inline BigInt alpha(const Point& k) {
  const int n = static_cast<int>(k.size());
  std::vector<std::vector<int>> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) nodes[i].push_back(n * i + t);
  }
  Rational total = 0;
  Point idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Rational weight = 1;
    Point at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      at[i] = nodes[i][idx[i]];
      for (int t = 0; t < n; ++t) {
        if (t != idx[i]) weight *= frac(k[i] - nodes[i][t], at[i] - nodes[i][t]);
      }
    }
    total += weight * Rational(monotone_triangles(at));
    int c = n - 1;
    while (c >= 0 && ++idx[c] == n) idx[c--] = 0;
    if (c < 0) break;
  }
  return to_int(total);
}

// Alternating sign matrices of order n (n <= 5), as row vectors.
inline std::vector<std::vector<std::vector<int>>> all_asms(int n) {
  std::vector<std::vector<int>> rows;
  std::vector<int> r(static_cast<std::size_t>(n));
  std::function<void(int)> gen = [&](int c) {
    if (c == n) {
      rows.push_back(r);
      return;
    }
    for (int v : {-1, 0, 1}) {
      r[c] = v;
      gen(c + 1);
    }
  };
  gen(0);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> m;
  std::function<void(const std::vector<int>&)> build = [&](const std::vector<int>& colsum) {
    if (static_cast<int>(m.size()) == n) {
      if (std::all_of(colsum.begin(), colsum.end(), [](int s) { return s == 1; })) out.push_back(m);
      return;
    }
    for (const auto& row : rows) {
      int partial = 0, sum = 0;
      bool ok = true;
      std::vector<int> next = colsum;
      for (int c = 0; c < n && ok; ++c) {
        if (row[c] != 0) {
          ok = (partial == 0 && row[c] == 1) || (partial == 1 && row[c] == -1);
          partial = row[c] == 1 ? 1 : 0;
        }
        sum += row[c];
        next[c] += row[c];
        ok = ok && next[c] >= 0 && next[c] <= 1;
      }
      if (!ok || sum != 1) continue;
      m.push_back(row);
      build(next);
      m.pop_back();
    }
  };
  build(std::vector<int>(static_cast<std::size_t>(n), 0));
  return out;
}

inline std::size_t one_position(const std::vector<int>& row) {
  return static_cast<std::size_t>(std::find(row.begin(), row.end(), 1) - row.begin());
}

}  // namespace oracle
