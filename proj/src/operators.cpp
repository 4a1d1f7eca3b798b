#include "gtseq/operators.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace gtseq {

BigInt product_formula(const Point& k) {
  const int n = static_cast<int>(k.size());
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= k[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(i)] + j - i;
      den *= j - i;
    }
  }
  if (num % den != 0) throw std::logic_error("product formula did not reduce to an integer");
  return num / den;
}

BigInt binomial_determinant(const Point& k) {
  const std::size_t n = k.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = binomial(BigInt(k[j] + static_cast<int>(j)), static_cast<int>(i));
    }
  }
  // Bareiss: after step p every entry of the trailing block is an exact minor.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < n && m[r][p] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      }
    }
    prev = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

ExtendedRange extended_range(int a, int b) {
  if (a <= b) return {1, {a, b}};
  return {-1, {b + 1, a - 1}};  // empty when b == a - 1
}

BigInt extended_sum(const std::function<BigInt(int)>& f, int a, int b) {
  ExtendedRange r = extended_range(a, b);
  BigInt total = 0;
  for (int i = r.range.lo; i <= r.range.hi; ++i) total += f(i);
  return r.sign < 0 ? BigInt(-total) : total;
}

struct LatticeFunction::State {
  Evaluator f;
  std::size_t cap = 0;
  bool memoize = true;
  mutable std::shared_mutex mutex;
  std::unordered_map<Point, BigInt, PointHash> memo;
};

LatticeFunction::LatticeFunction(int arity, Evaluator f, std::size_t memo_cap, bool memoize)
    : arity_(arity), state_(std::make_shared<State>()) {
  state_->f = std::move(f);
  state_->cap = memo_cap;
  state_->memoize = memoize;
}

BigInt LatticeFunction::operator()(const Point& k) const {
  if (static_cast<int>(k.size()) != arity_) {
    throw std::invalid_argument("lattice function of arity " + std::to_string(arity_) + " evaluated at " +
                                point_to_string(k));
  }
  if (!state_->memoize) return state_->f(k);
  {
    std::shared_lock lock(state_->mutex);
    if (auto it = state_->memo.find(k); it != state_->memo.end()) return it->second;
  }
  BigInt v = state_->f(k);
  std::unique_lock lock(state_->mutex);
  if (state_->cap == 0 || state_->memo.size() < state_->cap) state_->memo.emplace(k, v);
  return v;
}

std::size_t LatticeFunction::cache_size() const {
  std::shared_lock lock(state_->mutex);
  return state_->memo.size();
}

LatticeFunction swap_arguments(const LatticeFunction& f, int i, int j) {
  const int n = f.arity();
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("swap_arguments: index out of range");
  return LatticeFunction(n, [f, i, j](const Point& k) {
    Point s = k;
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(j - 1)]);
    return f(s);
  });
}

OperatorExpression::OperatorExpression(int arity) : arity_(arity) {
  if (arity < 0) throw std::invalid_argument("negative operator arity");
}

OperatorExpression OperatorExpression::identity(int arity) {
  OperatorExpression e(arity);
  e.add_term(Point(static_cast<std::size_t>(arity), 0), 1);
  return e;
}

OperatorExpression OperatorExpression::shift(int arity, int var, int amount) {
  if (var < 1 || var > arity) throw std::invalid_argument("operator variable k" + std::to_string(var) + " out of range");
  OperatorExpression e(arity);
  Point s(static_cast<std::size_t>(arity), 0);
  s[static_cast<std::size_t>(var - 1)] = amount;
  e.add_term(s, 1);
  return e;
}

OperatorExpression OperatorExpression::forward(int arity, int var) {
  return shift(arity, var, 1) - identity(arity);
}

OperatorExpression OperatorExpression::backward(int arity, int var) {
  return identity(arity) - shift(arity, var, -1);
}

OperatorExpression OperatorExpression::v(int arity, int x, int y) {
  return identity(arity) + backward(arity, x) * forward(arity, y);
}

OperatorExpression OperatorExpression::v_inverse(int arity, int x, int y, int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  const OperatorExpression step = -(backward(arity, x) * forward(arity, y));
  OperatorExpression total = identity(arity);
  OperatorExpression power = identity(arity);
  for (int t = 1; t <= trunc; ++t) {
    power = power * step;
    total += power;
  }
  return total;
}

OperatorExpression OperatorExpression::elementary_symmetric(int rho, const std::vector<OperatorExpression>& xs) {
  if (xs.empty()) throw std::invalid_argument("elementary_symmetric needs at least one operator");
  const int arity = xs.front().arity();
  if (rho < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
  std::vector<OperatorExpression> e(static_cast<std::size_t>(rho) + 1, OperatorExpression(arity));
  e[0] = identity(arity);
  for (const auto& x : xs) {
    for (int j = rho; j >= 1; --j) e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(rho)];
}

void OperatorExpression::add_term(const Point& shift, const BigInt& coeff) {
  if (static_cast<int>(shift.size()) != arity_) throw std::invalid_argument("operator term arity mismatch");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(shift, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

OperatorExpression& OperatorExpression::operator+=(const OperatorExpression& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("operator arity mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

OperatorExpression& OperatorExpression::operator-=(const OperatorExpression& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("operator arity mismatch");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

OperatorExpression OperatorExpression::operator+(const OperatorExpression& o) const {
  OperatorExpression r = *this;
  r += o;
  return r;
}

OperatorExpression OperatorExpression::operator-(const OperatorExpression& o) const {
  OperatorExpression r = *this;
  r -= o;
  return r;
}

OperatorExpression OperatorExpression::operator-() const { return OperatorExpression(arity_) - *this; }

OperatorExpression OperatorExpression::operator*(const OperatorExpression& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("operator arity mismatch");
  OperatorExpression r(arity_);
  Point s(static_cast<std::size_t>(arity_));
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
      r.add_term(s, ca * cb);
    }
  }
  return r;
}

OperatorExpression OperatorExpression::operator*(const BigInt& c) const {
  OperatorExpression r(arity_);
  for (const auto& [s, v] : terms_) r.add_term(s, v * c);
  return r;
}

OperatorExpression OperatorExpression::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative operator power");
  OperatorExpression r = identity(arity_);
  for (int t = 0; t < e; ++t) r = r * *this;
  return r;
}

std::string OperatorExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " ";
    out += (c < 0 ? "" : "+") + c.str() + "*E" + point_to_string(s);
  }
  return out;
}

BigInt apply_operator(const OperatorExpression& op, const LatticeFunction& f, const Point& point) {
  if (op.arity() != f.arity() || static_cast<int>(point.size()) != f.arity()) {
    throw std::invalid_argument("apply_operator: arity mismatch");
  }
  BigInt total = 0;
  Point at(point.size());
  for (const auto& [s, c] : op.terms()) {
    for (std::size_t i = 0; i < at.size(); ++i) at[i] = point[i] + s[i];
    total += c * f(at);
  }
  return total;
}

const char* operator_grammar() {
  return "Operator language (variables are k1..kn):\n"
         "  expr    := term (('+' | '-') term)*\n"
         "  term    := factor ('*'? factor)*            composition\n"
         "  factor  := '-' factor | primary ('^' int)?\n"
         "  primary := int | 'id' | '(' expr ')'\n"
         "           | ('E' | 'D' | 'd') ('^' ['-'] int)? var   shift, forward and backward difference\n"
         "           | 'V(' var ',' var ')'\n"
         "           | 'Vinv(' var ',' var (';' 'trunc=' int)? ')'   default trunc = n\n"
         "           | 'e(' int ';' expr (',' expr)* ')'   elementary symmetric function\n"
         "Examples: \"e(2; D k1, D k2, D k3)\", \"V(k1,k2)\", \"Vinv(k1,k2; trunc=4)\", \"D^3 k2\".\n";
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int arity) : s_(text), n_(arity) {}

  OperatorExpression parse() {
    OperatorExpression e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("operator expression: " + what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool peek_ident() {
    skip();
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }
  int integer() {
    if (!peek_digit()) fail("expected an integer");
    int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return v;
  }
  int signed_integer() { return accept('-') ? -integer() : integer(); }
  std::string ident() {
    if (!peek_ident()) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  int var() {
    const std::string name = ident();
    if (name.size() < 2 || name[0] != 'k') fail("expected a variable k1..k" + std::to_string(n_));
    int v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) fail("bad variable '" + name + "'");
      v = v * 10 + (name[i] - '0');
      if (v > n_) break;
    }
    if (v < 1 || v > n_) fail("variable '" + name + "' out of range 1.." + std::to_string(n_));
    return v;
  }

  OperatorExpression expr() {
    OperatorExpression e = term();
    while (true) {
      if (accept('+')) e += term();
      else if (accept('-')) e -= term();
      else return e;
    }
  }
  bool starts_factor() {
    return peek_digit() || peek_ident() || peek('(');
  }
  OperatorExpression term() {
    OperatorExpression e = factor();
    while (true) {
      if (accept('*')) e = e * factor();
      else if (starts_factor()) e = e * factor();
      else return e;
    }
  }
  OperatorExpression factor() {
    if (accept('-')) return -factor();
    OperatorExpression p = primary();
    if (accept('^')) p = p.pow(integer());
    return p;
  }
  OperatorExpression primary() {
    if (peek_digit()) return OperatorExpression::identity(n_) * BigInt(integer());
    if (accept('(')) {
      OperatorExpression e = expr();
      expect(')');
      return e;
    }
    const std::string name = ident();
    if (name == "id") return OperatorExpression::identity(n_);
    if (name == "E" || name == "D" || name == "d") {
      int power = 1;
      if (accept('^')) power = signed_integer();
      const int v = var();
      if (name == "E") return OperatorExpression::shift(n_, v, power);
      if (power < 0) fail("negative power of a difference operator");
      return (name == "D" ? OperatorExpression::forward(n_, v) : OperatorExpression::backward(n_, v)).pow(power);
    }
    if (name == "V" || name == "Vinv") {
      expect('(');
      const int x = var();
      expect(',');
      const int y = var();
      int trunc = n_;
      if (name == "Vinv" && accept(';')) {
        if (ident() != "trunc") fail("expected 'trunc'");
        expect('=');
        trunc = integer();
      }
      expect(')');
      return name == "V" ? OperatorExpression::v(n_, x, y) : OperatorExpression::v_inverse(n_, x, y, trunc);
    }
    if (name == "e") {
      expect('(');
      const int rho = integer();
      expect(';');
      std::vector<OperatorExpression> xs{expr()};
      while (accept(',')) xs.push_back(expr());
      expect(')');
      return OperatorExpression::elementary_symmetric(rho, xs);
    }
    fail("unknown operator '" + name + "'");
  }

  std::string s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorExpression parse_operator(const std::string& text, int arity) { return Parser(text, arity).parse(); }

}  // namespace gtseq
