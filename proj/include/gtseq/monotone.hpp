#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtseq/bigint.hpp"
#include "gtseq/grid.hpp"
#include "gtseq/operators.hpp"

namespace gtseq {

/// alpha(n; k) on all of Z^n, through the nested simple sums
///   sum over I subset [n-1]: l_q = k_q for q in I, otherwise
///   l_q runs over the extended range k_q + 1 .. k_{q+1} - [q+1 in I].
/// Memoized in a process-wide table that is safe to share between threads.
BigInt alpha(const Point& k);
std::size_t alpha_cache_size();
void clear_alpha_cache();

/// The same function as a LatticeFunction of arity n.
LatticeFunction alpha_function(int n);

/// Plain count of patterns with bottom row k (weakly increasing) whose rows
/// above the bottom are strictly increasing. Throws if k is not weakly increasing.
BigInt strict_row_patterns(const Point& k);

/// Streams the monotone triangles (strictly increasing rows) with bottom row k.
/// rows[i-1] is row i; nothing is produced unless k is strictly increasing.
void enumerate_monotone_triangles(const Point& k, const std::function<void(const std::vector<std::vector<int>>&)>& visit);

enum class Extension { kFirst = 1, kSecond = 2, kThird = 3, kFourth = 4 };
Extension parse_extension(const std::string& name);

struct ExtOptions {
  bool allow_adjacent_specials = false;  // third extension only
};

/// Mark values per entry:
///   first:  1 = starred
///   second: 1 = left-special, 2 = right-special
///   third:  1 = special
///   fourth: 0 = left arrow, 1 = right arrow, 2 = both arrows
/// In the first two variants the marks of a row are chosen together with that
/// row, so the bottom row carries none.
struct ExtTriangle {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<std::uint8_t>> marks;
  int inversions = 0;  // entries drawn from a reversed range or interval
  int sign = 1;
};

void enumerate_extension(Extension v, const Point& k, const std::function<void(const ExtTriangle&)>& visit,
                         const ExtOptions& opt = {});

/// Signed count of the extension objects, by dynamic programming over rows.
/// The memo lives as long as the counter. Not thread-safe.
class ExtensionCounter {
 public:
  explicit ExtensionCounter(Extension v, ExtOptions opt = {}) : v_(v), opt_(opt) {}
  BigInt count(const Point& k);

 private:
  BigInt count_state(const Point& values, const std::vector<std::uint8_t>& marks);
  Extension v_;
  ExtOptions opt_;
  std::unordered_map<Point, BigInt, PointHash> memo_;
};

BigInt extension_signed_count(Extension v, const Point& k, const ExtOptions& opt = {});

enum class OperatorForm { kThreeTerm, kDeltaDelta };
OperatorForm parse_operator_form(const std::string& name);

/// prod_{p<q} (E_p + E_q^{-1} - E_p E_q^{-1}) or prod_{p<q} (id + Delta_p delta_q),
/// expanded and applied to the product formula.
OperatorExpression alpha_operator(int n, OperatorForm form);
BigInt alpha_via_operator(const Point& k, OperatorForm form, int max_n = 5);

struct RefinedCounts {
  int n = 0;
  std::vector<BigInt> route_a;  // (-1)^{i-1} Delta^{i-1}_{k_1} alpha at (1,1,2,...,n-1)
  std::vector<BigInt> route_b;  // delta^{i-1}_{k_n} alpha at (1,2,...,n-1,n-1)
  std::vector<BigInt> route_c;  // monotone triangles with bottom 1..n by ones on the left edge
  bool agree = false;
  std::vector<std::vector<BigInt>> doubly;        // formula
  std::vector<std::vector<BigInt>> doubly_brute;  // direct count
};

RefinedCounts refined_asm(int n, int max_n = 6);
RefinedCounts doubly_refined_asm(int n, int max_n = 6);

enum class AlphaProperty { kP1, kP2, kP3, kP4, kLinearSystem, kDoublyRefinedIdentity };
AlphaProperty parse_alpha_property(const std::string& name);
std::string to_string(AlphaProperty p);

struct PropertyReport {
  std::string property;
  int n = 0;
  std::string grid;
  std::size_t points_checked = 0;
  std::vector<Violation> violations;
};

/// Evaluates the property pointwise on {grid}^n (grid is unused for the two
/// refined-number identities). Failures are reported, never thrown.
PropertyReport check_alpha_property(AlphaProperty p, int n, Range grid, const GridOptions& opt = {});

}  // namespace gtseq
