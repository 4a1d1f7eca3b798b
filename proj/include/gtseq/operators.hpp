#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gtseq/bigint.hpp"
#include "gtseq/util.hpp"

namespace gtseq {

/// prod_{i<j} (k_j - k_i + j - i) / (j - i), computed exactly.
BigInt product_formula(const Point& k);

/// det_{1<=i,j<=n} binom(k_j + j - 1, i - 1) with the polynomial binomial,
/// evaluated by fraction-free (Bareiss) elimination.
BigInt binomial_determinant(const Point& k);

/// Summation range under the extended convention: sum_{a}^{b} f equals
/// sign * sum over `range`.
struct ExtendedRange {
  int sign = 1;
  Range range;
};
ExtendedRange extended_range(int a, int b);

BigInt extended_sum(const std::function<BigInt(int)>& f, int a, int b);

/// A memoized function Z^n -> Z. Copies share the cache, which tolerates
/// concurrent readers; a racing duplicate computation is harmless.
class LatticeFunction {
 public:
  using Evaluator = std::function<BigInt(const Point&)>;

  /// memo_cap = 0 means unbounded; once the cap is reached new values are
  /// computed but no longer stored. memoize = false skips the cache entirely,
  /// for evaluators that already keep their own.
  LatticeFunction(int arity, Evaluator f, std::size_t memo_cap = 0, bool memoize = true);

  int arity() const { return arity_; }
  BigInt operator()(const Point& k) const;
  std::size_t cache_size() const;

 private:
  struct State;
  int arity_;
  std::shared_ptr<State> state_;
};

/// The coordinate swap S_{k_i,k_j} realized on the argument: g(k) = f(k with k_i, k_j exchanged).
LatticeFunction swap_arguments(const LatticeFunction& f, int i, int j);

/// Finite integer combination of shifts E^{s}, kept normalized (no zero
/// coefficients, one entry per shift vector).
class OperatorExpression {
 public:
  explicit OperatorExpression(int arity);  // the zero operator

  static OperatorExpression identity(int arity);
  static OperatorExpression shift(int arity, int var, int amount);  // E_{k_var}^amount
  static OperatorExpression forward(int arity, int var);            // Delta = E - id
  static OperatorExpression backward(int arity, int var);           // delta = id - E^{-1}
  /// V_{x,y} = id + delta_x Delta_y
  static OperatorExpression v(int arity, int x, int y);
  /// sum_{t=0}^{trunc} (-1)^t delta_x^t Delta_y^t, the inverse of V_{x,y} on
  /// polynomials of degree at most trunc in x.
  static OperatorExpression v_inverse(int arity, int x, int y, int trunc);
  static OperatorExpression elementary_symmetric(int rho, const std::vector<OperatorExpression>& xs);

  int arity() const { return arity_; }
  const std::map<Point, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  OperatorExpression& operator+=(const OperatorExpression& o);
  OperatorExpression& operator-=(const OperatorExpression& o);
  OperatorExpression operator+(const OperatorExpression& o) const;
  OperatorExpression operator-(const OperatorExpression& o) const;
  OperatorExpression operator-() const;
  OperatorExpression operator*(const OperatorExpression& o) const;  // composition
  OperatorExpression operator*(const BigInt& c) const;
  OperatorExpression pow(int e) const;
  bool operator==(const OperatorExpression&) const = default;

  void add_term(const Point& shift, const BigInt& coeff);
  std::string to_string() const;

 private:
  int arity_;
  std::map<Point, BigInt> terms_;
};

BigInt apply_operator(const OperatorExpression& op, const LatticeFunction& f, const Point& point);

/// Parses the operator mini-language (see operator_grammar()) for the given arity.
OperatorExpression parse_operator(const std::string& text, int arity);
const char* operator_grammar();

}  // namespace gtseq
