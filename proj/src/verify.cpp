#include "gtseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>

#include "gtseq/intervals.hpp"
#include "gtseq/labelings.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/operators.hpp"
#include "gtseq/paths.hpp"
#include "gtseq/patterns.hpp"

namespace gtseq {
namespace {

using Op = OperatorExpression;

std::string grid_text(Range r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

std::vector<int> orders(const VerifyConfig& cfg, int lo, int default_max) {
  if (cfg.n) {
    if (*cfg.n < lo) return {};
    return {*cfg.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= cfg.max_n.value_or(default_max); ++n) out.push_back(n);
  return out;
}

Range grid_or(const VerifyConfig& cfg, Range fallback) { return cfg.grid.value_or(fallback); }

void absorb(VerificationReport& rep, GridOutcome&& out, const std::string& prefix) {
  rep.points_checked += out.checks;
  for (auto& v : out.violations) {
    v.what = prefix + (v.what.empty() ? "" : " " + v.what);
    rep.violations.push_back(std::move(v));
  }
}

void expect_equal(VerificationReport& rep, const Point& at, const std::string& what, const BigInt& lhs,
                  const BigInt& rhs) {
  ++rep.points_checked;
  if (lhs != rhs) rep.violations.push_back({at, what, lhs, rhs});
}

std::string n_tag(int n) { return "n=" + std::to_string(n); }

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// The tree sequences a suite runs on: basic first, then seeded random ones.
std::vector<TreeSequence> suite_sequences(int n, int random_count, std::uint64_t seed) {
  std::vector<TreeSequence> out{canonical_trees(TreeFamily::kBasic, n)};
  auto r = sample_tree_sequences(n, random_count, seed);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

// L_n(T, .) as a LatticeFunction backed by a counter owned by the caller.
LatticeFunction counter_function(const std::shared_ptr<SignedCounter>& c, int n) {
  return LatticeFunction(n, [c](const Point& k) { return c->count(k); }, 0, false);
}

struct CounterState {
  std::vector<std::shared_ptr<SignedCounter>> counters;
  std::vector<LatticeFunction> functions;
};

CounterState make_counter_state(const std::vector<TreeSequence>& seqs, int n, std::size_t cap) {
  CounterState s;
  for (const auto& ts : seqs) {
    auto c = std::make_shared<SignedCounter>(ts);
    c->set_memo_cap(cap);
    s.functions.push_back(counter_function(c, n));
    s.counters.push_back(std::move(c));
  }
  return s;
}

// ---------------------------------------------------------------- suites

void suite_theorem_main(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-2, 2});
  rep.parameters["grid"] = grid_text(g);
  rep.parameters["trees"] = cfg.trees;
  for (int n : orders(cfg, 1, 4)) {
    const auto seqs = sample_tree_sequences(n, cfg.trees, cfg.seed);
    absorb(rep,
           run_grid(
               grid_points(n, g), [&] { return make_counter_state(seqs, n, cfg.memo_cap); },
               [&](CounterState& s, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 const BigInt p = product_formula(k);
                 for (std::size_t t = 0; t < s.counters.size(); ++t) {
                   BigInt v = s.counters[t]->count(k);
                   if (v != p) bad.push_back({k, "random tree sequence #" + std::to_string(t), v, p});
                 }
                 return s.counters.size();
               },
               cfg.exec),
           n_tag(n));
  }
}

void suite_formula(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-3, 3});
  rep.parameters["grid"] = grid_text(g);
  for (int n : orders(cfg, 1, 5)) {
    absorb(rep,
           run_grid(
               grid_points(n, g), [] { return 0; },
               [](int&, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 BigInt d = binomial_determinant(k);
                 BigInt p = product_formula(k);
                 if (d != p) bad.push_back({k, "determinant", d, p});
                 return 1;
               },
               cfg.exec),
           n_tag(n));
  }
}

std::vector<TreeSequence> independence_family(int n, const VerifyConfig& cfg) {
  std::vector<TreeSequence> out{canonical_trees(TreeFamily::kBasic, n)};
  if (n >= 2) out.push_back(canonical_trees(TreeFamily::kSwap, n, {1, n, 0}));
  out.push_back(canonical_trees(TreeFamily::kLeafChain, n, {1, 0, 0}));
  auto r = sample_tree_sequences(n, cfg.trees, cfg.seed);
  out.insert(out.end(), r.begin(), r.end());
  // reversing or sliding an edge of T_n leaves the count unchanged
  const TreeSequence& base = r.empty() ? out.front() : r.front();
  if (n >= 2) out.push_back(base.with_tree(n, reverse_edge(base.tree(n), 1)));
  if (n >= 3) {
    const NTree& t = base.tree(n);
    for (int j = 2; j < n; ++j) {
      const Edge a = t.edge(1), b = t.edge(j);
      if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head) {
        out.push_back(base.with_tree(n, slide_edge(t, 1, j)));
        break;
      }
    }
  }
  return out;
}

void suite_independence(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-2, 2});
  rep.parameters["grid"] = grid_text(g);
  rep.parameters["trees"] = cfg.trees;
  rep.parameters["families"] = "basic, swap(1,n), leafchain(1), random, T_n with edge 1 reversed, T_n with edge 1 slid";
  for (int n : orders(cfg, 1, 4)) {
    const auto seqs = independence_family(n, cfg);
    absorb(rep,
           run_grid(
               grid_points(n, g), [&] { return make_counter_state(seqs, n, cfg.memo_cap); },
               [&](CounterState& s, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 const BigInt ref = s.counters[0]->count(k);
                 for (std::size_t t = 1; t < s.counters.size(); ++t) {
                   BigInt v = s.counters[t]->count(k);
                   if (v != ref) bad.push_back({k, "sequence #" + std::to_string(t) + " vs basic", v, ref});
                 }
                 return s.counters.size() - 1;
               },
               cfg.exec),
           n_tag(n));
  }
}

void suite_shift_antisym(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-2, 2});
  rep.parameters["grid"] = grid_text(g);
  rep.parameters["trees"] = cfg.trees;
  for (int n : orders(cfg, 2, 4)) {
    const auto seqs = suite_sequences(n, cfg.trees, cfg.seed);
    absorb(rep,
           run_grid(
               grid_points(n, g), [&] { return make_counter_state(seqs, n, cfg.memo_cap); },
               [&](CounterState& s, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 std::size_t checks = 0;
                 for (int i = 1; i <= n; ++i) {
                   for (int j = i + 1; j <= n; ++j) {
                     Point kk = k;
                     kk[static_cast<std::size_t>(i - 1)] = k[static_cast<std::size_t>(j - 1)] + j - i;
                     kk[static_cast<std::size_t>(j - 1)] = k[static_cast<std::size_t>(i - 1)] + i - j;
                     const std::string pair = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                     BigInt p = product_formula(k), pp = product_formula(kk);
                     if (p != -pp) bad.push_back({k, "formula " + pair, p, -pp});
                     ++checks;
                     for (std::size_t t = 0; t < s.counters.size(); ++t) {
                       BigInt a = s.counters[t]->count(k), b = s.counters[t]->count(kk);
                       if (a != -b) bad.push_back({k, "sequence #" + std::to_string(t) + " " + pair, a, -b});
                       ++checks;
                     }
                   }
                 }
                 return checks;
               },
               cfg.exec),
           n_tag(n));
  }
}

// Every named operator must send L_n (for each sequence) and alpha to zero.
void annihilation_suite(const VerifyConfig& cfg, VerificationReport& rep,
                        const std::function<std::vector<std::pair<std::string, Op>>(int)>& ops_for) {
  const Range g = grid_or(cfg, {-2, 2});
  rep.parameters["grid"] = grid_text(g);
  rep.parameters["trees"] = cfg.restricted_trees;
  for (int n : orders(cfg, 1, 4)) {
    const auto seqs = suite_sequences(n, cfg.restricted_trees, cfg.seed);
    const auto ops = ops_for(n);
    const LatticeFunction a = alpha_function(n);
    absorb(rep,
           run_grid(
               grid_points(n, g), [&] { return make_counter_state(seqs, n, cfg.memo_cap); },
               [&](CounterState& s, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 std::size_t checks = 0;
                 for (const auto& [name, op] : ops) {
                   for (std::size_t t = 0; t < s.functions.size(); ++t) {
                     BigInt v = apply_operator(op, s.functions[t], k);
                     if (v != 0) bad.push_back({k, name + " on L, sequence #" + std::to_string(t), v, 0});
                     ++checks;
                   }
                   BigInt v = apply_operator(op, a, k);
                   if (v != 0) bad.push_back({k, name + " on alpha", v, 0});
                   ++checks;
                 }
                 return checks;
               },
               cfg.exec),
           n_tag(n));
  }
}

void suite_delta_n(const VerifyConfig& cfg, VerificationReport& rep) {
  annihilation_suite(cfg, rep, [](int n) {
    std::vector<std::pair<std::string, Op>> ops;
    for (int i = 1; i <= n; ++i) ops.emplace_back("Delta^n k" + std::to_string(i), Op::forward(n, i).pow(n));
    return ops;
  });
}

void suite_e_rho(const VerifyConfig& cfg, VerificationReport& rep) {
  annihilation_suite(cfg, rep, [](int n) {
    std::vector<Op> fw, bw;
    for (int i = 1; i <= n; ++i) {
      fw.push_back(Op::forward(n, i));
      bw.push_back(Op::backward(n, i));
    }
    std::vector<std::pair<std::string, Op>> ops;
    for (int rho = 1; rho <= n; ++rho) {
      ops.emplace_back("e_" + std::to_string(rho) + "(Delta)", Op::elementary_symmetric(rho, fw));
      ops.emplace_back("e_" + std::to_string(rho) + "(delta)", Op::elementary_symmetric(rho, bw));
    }
    return ops;
  });
}

// One restricted comparison: lhs counter (or operator on L) against rhs counter.
struct RestrictedCase {
  std::string name;
  std::size_t seq = 0;
  std::optional<Op> op;  // lhs = op applied to L_n(seq)
  std::optional<RestrictionSpec> lhs;
  std::optional<RestrictionSpec> rhs;  // absent: compare with zero
};

struct RestrictedState {
  CounterState base;
  std::vector<std::unique_ptr<RestrictedCounter>> lhs;
  std::vector<std::unique_ptr<RestrictedCounter>> rhs;
};

void restricted_suite(const VerifyConfig& cfg, VerificationReport& rep, int min_n,
                      const std::function<std::vector<RestrictedCase>(int, std::size_t)>& cases_for) {
  const Range g = grid_or(cfg, {-1, 1});
  rep.parameters["grid"] = grid_text(g);
  rep.parameters["trees"] = cfg.restricted_trees;
  for (int n : orders(cfg, min_n, 4)) {
    const auto seqs = suite_sequences(n, cfg.restricted_trees, cfg.seed);
    std::vector<RestrictedCase> cases;
    for (std::size_t t = 0; t < seqs.size(); ++t) {
      auto c = cases_for(n, t);
      cases.insert(cases.end(), c.begin(), c.end());
    }
    absorb(rep,
           run_grid(
               grid_points(n, g),
               [&] {
                 RestrictedState s;
                 s.base = make_counter_state(seqs, n, cfg.memo_cap);
                 for (const auto& c : cases) {
                   s.lhs.push_back(c.lhs ? std::make_unique<RestrictedCounter>(seqs[c.seq], *c.lhs) : nullptr);
                   s.rhs.push_back(c.rhs ? std::make_unique<RestrictedCounter>(seqs[c.seq], *c.rhs) : nullptr);
                 }
                 return s;
               },
               [&](RestrictedState& s, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 for (std::size_t c = 0; c < cases.size(); ++c) {
                   const auto& rc = cases[c];
                   BigInt lhs = rc.op ? apply_operator(*rc.op, s.base.functions[rc.seq], k) : s.lhs[c]->count(k);
                   BigInt rhs = s.rhs[c] ? s.rhs[c]->count(k) : BigInt(0);
                   if (lhs != rhs) bad.push_back({k, rc.name + " sequence #" + std::to_string(rc.seq), lhs, rhs});
                 }
                 return cases.size();
               },
               cfg.exec),
           n_tag(n));
  }
}

void suite_prop_first(const VerifyConfig& cfg, VerificationReport& rep) {
  restricted_suite(cfg, rep, 1, [](int n, std::size_t t) {
    std::vector<RestrictedCase> out;
    for (const auto& R : all_subsets(n)) {
      Op op = Op::identity(n);
      for (int r : R) op = op * Op::forward(n, r);
      RestrictionSpec spec{RestrictionMode::kVertexSet, n, R, 0, std::nullopt};
      out.push_back({"R=" + set_text(R), t, op, std::nullopt, spec});
    }
    return out;
  });
}

void suite_prop_second(const VerifyConfig& cfg, VerificationReport& rep) {
  restricted_suite(cfg, rep, 2, [](int n, std::size_t t) {
    std::vector<RestrictedCase> out;
    for (int m = 2; m <= n; ++m) {
      for (const auto& R : all_subsets(m - 1)) {
        RestrictionSpec edge{RestrictionMode::kEdgeSet, m, R, 0, std::nullopt};
        RestrictionSpec vertex{RestrictionMode::kVertexSet, m - 1, R, 0, std::nullopt};
        out.push_back({"m=" + std::to_string(m) + " R'=" + set_text(R), t, std::nullopt, edge, vertex});
      }
    }
    return out;
  });
}

void suite_rho_zero(const VerifyConfig& cfg, VerificationReport& rep) {
  restricted_suite(cfg, rep, 2, [](int n, std::size_t t) {
    std::vector<RestrictedCase> out;
    for (int m = 2; m <= n; ++m) {
      for (int rho = 1; rho <= m; ++rho) {
        RestrictionSpec spec{RestrictionMode::kSize, m, {}, rho, std::nullopt};
        out.push_back({"m=" + std::to_string(m) + " rho=" + std::to_string(rho), t, std::nullopt, spec, std::nullopt});
      }
    }
    return out;
  });
}

void suite_distinct(const VerifyConfig& cfg, VerificationReport& rep) {
  restricted_suite(cfg, rep, 2, [](int n, std::size_t t) {
    std::vector<RestrictedCase> out;
    for (int m = 2; m <= n; ++m) {
      for (const auto& R : all_subsets(m)) {
        for (int d = 2; d <= m; ++d) {
          RestrictionSpec plain{RestrictionMode::kVertexSet, m, R, 0, std::nullopt};
          RestrictionSpec filtered{RestrictionMode::kVertexSet, m, R, 0, d};
          out.push_back({"m=" + std::to_string(m) + " R=" + set_text(R) + " distinct level " + std::to_string(d), t,
                         std::nullopt, filtered, plain});
        }
      }
    }
    return out;
  });
}

struct ExtState {
  std::vector<ExtensionCounter> counters;
};

void suite_extensions_agree(const VerifyConfig& cfg, VerificationReport& rep) {
  static const BigInt kAsm[] = {1, 2, 7, 42};
  for (int n = 1; n <= 4; ++n) {
    Point k;
    for (int v = 1; v <= n; ++v) k.push_back(v);
    expect_equal(rep, k, "alpha(n;1..n)", alpha(k), kAsm[n - 1]);
  }
  rep.parameters["grid"] = cfg.grid ? grid_text(*cfg.grid) : "n<=3: -2..2, n=4: 0..3";
  for (int n : orders(cfg, 1, 4)) {
    const Range g = grid_or(cfg, n <= 3 ? Range{-2, 2} : Range{0, 3});
    absorb(rep,
           run_grid(
               grid_points(n, g),
               [] {
                 ExtState s;
                 for (auto v : {Extension::kFirst, Extension::kSecond, Extension::kThird, Extension::kFourth}) {
                   s.counters.emplace_back(v);
                 }
                 s.counters.emplace_back(Extension::kThird, ExtOptions{true});
                 return s;
               },
               [&](ExtState& s, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 static const char* names[] = {"first extension", "second extension", "third extension",
                                               "fourth extension", "third extension, adjacent specials"};
                 std::size_t checks = 0;
                 const BigInt a = alpha(k);
                 for (std::size_t v = 0; v < s.counters.size(); ++v) {
                   BigInt c = s.counters[v].count(k);
                   if (c != a) bad.push_back({k, names[v], c, a});
                   ++checks;
                 }
                 for (auto form : {OperatorForm::kThreeTerm, OperatorForm::kDeltaDelta}) {
                   BigInt c = alpha_via_operator(k, form);
                   if (c != a) {
                     bad.push_back({k, form == OperatorForm::kThreeTerm ? "three-term operator" : "delta-delta operator",
                                    c, a});
                   }
                   ++checks;
                 }
                 if (std::is_sorted(k.begin(), k.end())) {
                   BigInt c = strict_row_patterns(k);
                   if (c != a) bad.push_back({k, "strict-row patterns", c, a});
                   ++checks;
                 }
                 if (std::adjacent_find(k.begin(), k.end(), std::greater_equal<int>()) == k.end()) {
                   BigInt brute = 0;
                   enumerate_monotone_triangles(k, [&](const auto&) { brute += 1; });
                   for (auto v : {Extension::kFirst, Extension::kSecond}) {
                     BigInt objects = 0;
                     bool all_plus = true;
                     enumerate_extension(v, k, [&](const ExtTriangle& t) {
                       objects += 1;
                       all_plus = all_plus && t.sign == 1;
                     });
                     const std::string name = v == Extension::kFirst ? "first" : "second";
                     if (!all_plus) bad.push_back({k, name + " extension has a negative object", 0, 0});
                     if (objects != brute) bad.push_back({k, name + " extension object count vs monotone triangles", objects, brute});
                     checks += 2;
                   }
                 }
                 return checks;
               },
               cfg.exec),
           n_tag(n));
  }
}

void suite_alpha_props(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-2, 2});
  rep.parameters["grid"] = grid_text(g);
  for (auto p : {AlphaProperty::kP1, AlphaProperty::kP2, AlphaProperty::kP3, AlphaProperty::kP4}) {
    for (int n : orders(cfg, 1, 4)) {
      PropertyReport pr = check_alpha_property(p, n, g, cfg.exec);
      rep.points_checked += pr.points_checked;
      for (auto& v : pr.violations) {
        v.what = pr.property + " " + n_tag(n) + " " + v.what;
        rep.violations.push_back(std::move(v));
      }
    }
  }
}

void suite_refined(const VerifyConfig& cfg, VerificationReport& rep) {
  static const std::map<int, std::vector<int>> expected{{1, {1}}, {2, {1, 1}}, {3, {2, 3, 2}}, {4, {7, 14, 14, 7}}};
  for (int n : orders(cfg, 1, 4)) {
    RefinedCounts rc = refined_asm(n);
    for (int i = 1; i <= n; ++i) {
      const std::size_t x = static_cast<std::size_t>(i - 1);
      const Point at{n, i};
      expect_equal(rep, at, "route (a) vs (c)", rc.route_a[x], rc.route_c[x]);
      expect_equal(rep, at, "route (b) vs (c)", rc.route_b[x], rc.route_c[x]);
      if (auto it = expected.find(n); it != expected.end()) {
        expect_equal(rep, at, "A_{n,i} reference value", rc.route_c[x], it->second[x]);
      }
    }
    PropertyReport pr = check_alpha_property(AlphaProperty::kLinearSystem, n, {0, 0}, cfg.exec);
    rep.points_checked += pr.points_checked;
    for (auto& v : pr.violations) {
      v.what = n_tag(n) + " " + v.what;
      rep.violations.push_back(std::move(v));
    }
  }
}

void suite_doubly_refined(const VerifyConfig& cfg, VerificationReport& rep) {
  rep.parameters["identity domain"] = "1 <= i,j <= min(n, 2n-3)";
  for (int n : orders(cfg, 1, 4)) {
    PropertyReport pr = check_alpha_property(AlphaProperty::kDoublyRefinedIdentity, n, {0, 0}, cfg.exec);
    rep.points_checked += pr.points_checked;
    for (auto& v : pr.violations) {
      v.what = n_tag(n) + " " + v.what;
      rep.violations.push_back(std::move(v));
    }
    RefinedCounts rc = doubly_refined_asm(n);
    for (int i = 1; i <= n; ++i) {
      BigInt row = 0;
      for (const auto& v : rc.doubly[static_cast<std::size_t>(i - 1)]) row += v;
      expect_equal(rep, {n, i}, "row sum vs A_{n,i}", row, rc.route_c[static_cast<std::size_t>(i - 1)]);
    }
  }
}

void suite_paths(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range classic_grid = grid_or(cfg, {0, 3});
  const Range general_grid = grid_or(cfg, {-2, 2});
  rep.parameters["classic grid"] = grid_text(classic_grid) + " (weakly increasing)";
  rep.parameters["general grid"] = grid_text(general_grid);
  rep.parameters["step grammar"] = to_string(StepGrammar::kBelowAxis);

  for (int n : orders(cfg, 1, 3)) {
    absorb(rep,
           run_grid(
               grid_points(n, classic_grid), [] { return 0; },
               [](int&, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 if (!std::is_sorted(k.begin(), k.end()) || k.front() < 0) return 0;
                 const BigInt p = product_formula(k);
                 BigInt s = signed_families(k, PathVariant::kClassic);
                 BigInt c = count_nonintersecting(k);
                 BigInt d = binomial_determinant(k);
                 if (s != p) bad.push_back({k, "classic signed families", s, p});
                 if (c != p) bad.push_back({k, "non-intersecting families", c, p});
                 if (d != p) bad.push_back({k, "determinant", d, p});
                 return 3;
               },
               cfg.exec),
           n_tag(n) + " classic");
    absorb(rep,
           run_grid(
               grid_points(n, general_grid), [] { return 0; },
               [](int&, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 const BigInt p = product_formula(k);
                 BigInt s = signed_families(k, PathVariant::kGeneral);
                 if (s != p) bad.push_back({k, "general signed families", s, p});
                 return 1;
               },
               cfg.exec),
           n_tag(n) + " general");
  }

  // Calibration of the below-axis step grammar on n <= 2; alternatives are informational.
  Json calibration = Json::object();
  for (auto gr : {StepGrammar::kBelowAxis, StepGrammar::kBelowStart, StepGrammar::kNoLeadingSouth}) {
    int mismatches = 0;
    for (int n = 1; n <= 2; ++n) {
      for (const Point& k : grid_points(n, {-2, 2})) {
        BigInt s = signed_families(k, PathVariant::kGeneral, gr);
        BigInt p = product_formula(k);
        if (s != p) {
          ++mismatches;
          if (gr == StepGrammar::kBelowAxis) rep.violations.push_back({k, "calibration of the frozen grammar", s, p});
        }
        if (gr == StepGrammar::kBelowAxis) ++rep.points_checked;
      }
    }
    calibration[to_string(gr)] = mismatches;
  }
  rep.parameters["calibration mismatches (n<=2, -2..2)"] = calibration;

  // The LGV tail swap is a sign-reversing involution on intersecting families.
  for (int n = 2; n <= 3; ++n) {
    for (const Point& k : grid_points(n, {0, 2})) {
      if (!std::is_sorted(k.begin(), k.end())) continue;
      enumerate_families(k, PathVariant::kClassic, [&](const PathFamily& f) {
        if (!is_intersecting(f)) return;
        auto g = lgv_tail_swap(f);
        ++rep.points_checked;
        if (!g || g->sign != -f.sign) {
          rep.violations.push_back({k, "tail swap does not reverse the sign", f.sign, g ? g->sign : 0});
          return;
        }
        auto back = lgv_tail_swap(*g);
        bool same = back && back->pi == f.pi;
        for (std::size_t i = 0; same && i < f.paths.size(); ++i) same = back->paths[i].steps == f.paths[i].steps;
        if (!same) rep.violations.push_back({k, "tail swap is not an involution", 0, 0});
      });
    }
  }
}

void suite_intervals(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-5, 5});
  rep.parameters["grid"] = grid_text(g);
  for (const Point& p : grid_points(3, g)) {
    const int x = p[0], y = p[1], z = p[2];
    auto fail = [&](const std::string& what) { rep.violations.push_back({p, what, 0, 0}); };

    const auto A = interval(x, y), B = interval(x, z + 1), C = interval(y + 1, z + 1);
    rep.points_checked += 4;
    if (symmetric_difference(A.members, B.members) != C.members) fail("[x,y] sym.diff [x,z+1] != [y+1,z+1]");
    const bool nested = is_subset(A.members, B.members) || is_subset(B.members, A.members);
    const bool disjoint = are_disjoint(A.members, B.members);
    const bool one_inversion = A.inversion != B.inversion;
    if (!nested && !disjoint) fail("[x,y], [x,z+1] neither nested nor disjoint");
    if (one_inversion && !disjoint) fail("exactly one inversion but not disjoint");
    if (!A.empty() && !B.empty() && disjoint && !one_inversion) fail("nonempty, disjoint, but not exactly one inversion");

    const auto D = interval(z, x), E = interval(y - 1, x), F = interval(y - 1, z - 1);
    rep.points_checked += 2;
    if (symmetric_difference(D.members, E.members) != F.members) fail("[z,x] sym.diff [y-1,x] != [y-1,z-1]");
    if (!D.empty() && !E.empty()) {
      const bool both = !set_difference(D.members, E.members).empty() && !set_difference(E.members, D.members).empty();
      if (both != (D.inversion != E.inversion)) fail("both differences nonempty iff exactly one inversion");
    }
  }
}

void suite_decomposition(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-2, 2});
  rep.parameters["grid"] = grid_text(g);
  for (int n : orders(cfg, 2, 3)) {
    absorb(rep,
           run_grid(
               grid_points(n, g), [] { return 0; },
               [n](int&, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 std::size_t checks = 0;
                 const BigInt p = product_formula(k);
                 for (int i = 1; i < n; ++i) {
                   const auto a = shift_antisym_decomposition(k, i);
                   const auto b = shift_antisym_decomposition(shift_antisym_partner(k, i), i);
                   const std::string tag = "i=" + std::to_string(i);
                   BigInt sum = a[0] + a[1] + a[2] + a[3];
                   if (sum != p) bad.push_back({k, tag + " sum of parts", sum, p});
                   ++checks;
                   for (std::size_t c = 0; c < 4; ++c) {
                     if (a[c] != -b[c]) bad.push_back({k, tag + " part " + std::to_string(c + 1), a[c], -b[c]});
                     ++checks;
                   }
                 }
                 return checks;
               },
               cfg.exec),
           n_tag(n));
  }
}

void suite_patterns(const VerifyConfig& cfg, VerificationReport& rep) {
  const Range g = grid_or(cfg, {-3, 3});
  rep.parameters["grid"] = grid_text(g);
  for (int n : orders(cfg, 1, 4)) {
    absorb(rep,
           run_grid(
               grid_points(n, g), [] { return 0; },
               [](int&, const Point& k, std::vector<Violation>& bad) -> std::size_t {
                 BigInt c = pattern_signed_count(k), p = product_formula(k);
                 if (c != p) bad.push_back({k, "signed pattern count", c, p});
                 return 1;
               },
               cfg.exec),
           n_tag(n));
  }
  // Bijection with tree sequences over basic trees, element by element.
  for (int n = 1; n <= 3; ++n) {
    const TreeSequence basic = canonical_trees(TreeFamily::kBasic, n);
    for (const Point& k : grid_points(n, {-2, 2})) {
      const auto pats = all_patterns(k);
      const auto seqs = all_sequences(basic, k);
      expect_equal(rep, k, "pattern and tree-sequence counts", BigInt(pats.size()), BigInt(seqs.size()));
      for (std::size_t t = 0; t < std::min(pats.size(), seqs.size()); ++t) {
        const GTTreeSequence s = pattern_to_tree_sequence(pats[t]);
        ++rep.points_checked;
        if (s.levels != seqs[t].levels || s.sign != seqs[t].sign || s.inversions != seqs[t].inversions) {
          rep.violations.push_back({k, "pattern #" + std::to_string(t) + " differs from its tree sequence", 0, 0});
        }
        if (tree_sequence_to_pattern(s).rows != pats[t].rows) {
          rep.violations.push_back({k, "pattern #" + std::to_string(t) + " does not round-trip", 0, 0});
        }
      }
    }
  }
  // Classical patterns against an independent tableau enumerator.
  for (int n = 1; n <= 3; ++n) {
    for (const Point& k : grid_points(n, {0, 3})) {
      if (!std::is_sorted(k.begin(), k.end())) continue;
      std::vector<int> shape(k.rbegin(), k.rend());
      expect_equal(rep, k, "pattern count vs tableaux", pattern_signed_count(k), count_ssyt(shape, n));
      for (const auto& p : all_patterns(k)) {
        ++rep.points_checked;
        SSYT t = pattern_to_ssyt(p);
        if (!is_ssyt(t, n) || ssyt_to_pattern(t, n).rows != p.rows) {
          rep.violations.push_back({k, "tableau round trip", 0, 0});
        }
      }
    }
  }
}

void suite_trees(const VerifyConfig& cfg, VerificationReport& rep) {
  auto check_tree = [&](const NTree& t) {
    const int s = tree_sign(t).sign;
    for (int root = 2; root <= t.order(); ++root) {
      ++rep.points_checked;
      if (tree_sign(t, root).sign != s) rep.violations.push_back({{t.order(), root}, "root dependence", tree_sign(t, root).sign, s});
    }
    for (int j = 1; j < t.order(); ++j) {
      ++rep.points_checked;
      if (tree_sign(reverse_edge(t, j)).sign != -s) rep.violations.push_back({{t.order(), j}, "reversal keeps the sign", 0, 0});
      for (int i = 1; i < t.order(); ++i) {
        if (i == j) continue;
        const Edge a = t.edge(i), b = t.edge(j);
        const bool adjacent = a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head;
        if (!adjacent) continue;
        rep.points_checked += 2;
        if (tree_sign(slide_edge(t, i, j)).sign != s) rep.violations.push_back({{t.order(), i, j}, "slide changes the sign", 0, 0});
        if (tree_sign(interchange_edges(t, i, j)).sign != -s) {
          rep.violations.push_back({{t.order(), i, j}, "edge interchange keeps the sign", 0, 0});
        }
      }
      ++rep.points_checked;
      if (tree_sign(swap_vertices(t, t.edge(j).tail, t.edge(j).head)).sign != -s) {
        rep.violations.push_back({{t.order(), j}, "vertex swap keeps the sign", 0, 0});
      }
    }
  };
  const int exhaustive = cfg.max_n.value_or(4);
  for (int n = 1; n <= exhaustive; ++n) {
    for (const auto& t : all_trees(n)) check_tree(t);
  }
  std::mt19937_64 rng(cfg.seed);
  for (int n = 1; n <= 7; ++n) {
    for (int s = 0; s < 20; ++s) check_tree(random_tree(n, rng));
  }
  // Every tree reaches B_n through reversals and slides.
  const int reach = std::min(5, cfg.max_n.value_or(5));
  for (int n = 1; n <= reach; ++n) {
    std::set<NTree> seen{basic_tree(n)};
    std::deque<NTree> queue{basic_tree(n)};
    while (!queue.empty()) {
      NTree t = queue.front();
      queue.pop_front();
      auto push = [&](NTree u) {
        if (seen.insert(u).second) queue.push_back(std::move(u));
      };
      for (int j = 1; j < n; ++j) {
        push(reverse_edge(t, j));
        for (int i = 1; i < n; ++i) {
          if (i == j) continue;
          const Edge a = t.edge(i), b = t.edge(j);
          if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head) push(slide_edge(t, i, j));
        }
      }
    }
    expect_equal(rep, {n}, "trees reachable from B_n", BigInt(seen.size()), BigInt(all_trees(n).size()));
  }
}

using SuiteFn = void (*)(const VerifyConfig&, VerificationReport&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"theorem-main", suite_theorem_main},
      {"formula", suite_formula},
      {"independence", suite_independence},
      {"shift-antisym", suite_shift_antisym},
      {"delta-n", suite_delta_n},
      {"e-rho", suite_e_rho},
      {"prop-first", suite_prop_first},
      {"prop-second", suite_prop_second},
      {"rho-zero", suite_rho_zero},
      {"distinct", suite_distinct},
      {"extensions-agree", suite_extensions_agree},
      {"alpha-props", suite_alpha_props},
      {"refined", suite_refined},
      {"doubly-refined", suite_doubly_refined},
      {"paths", suite_paths},
      {"intervals", suite_intervals},
      {"decomposition", suite_decomposition},
      {"patterns", suite_patterns},
      {"trees", suite_trees},
  };
  return table;
}

Json config_json(const VerifyConfig& cfg) {
  Json j = Json::object();
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.max_n) j["maxN"] = *cfg.max_n;
  j["seed"] = cfg.seed;
  j["mode"] = cfg.exec.mode == ExecutionMode::kSerial ? "serial" : "parallel";
  return j;
}

}  // namespace

std::vector<TreeSequence> sample_tree_sequences(int n, int count, std::uint64_t seed) {
  std::vector<TreeSequence> out;
  for (int t = 0; t < count; ++t) {
    out.push_back(canonical_trees(TreeFamily::kRandom, n, {0, 0, seed + static_cast<std::uint64_t>(t)}));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (cfg.trees < 1 || cfg.restricted_trees < 0) throw std::invalid_argument("tree sample counts must be positive");
  if (cfg.n && *cfg.n < 1) throw std::invalid_argument("n must be positive");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = suite;
  rep.parameters = config_json(cfg);
  if (suite == "all") {
    for (const auto& [name, fn] : suite_table()) {
      VerificationReport part = run_suite(name, cfg);
      rep.points_checked += part.points_checked;
      for (const auto& v : part.violations) {
        Violation w = v;
        w.what = name + ": " + w.what;
        rep.violations.push_back(std::move(w));
      }
      rep.parts.push_back(std::move(part));
    }
  } else {
    auto it = std::find_if(suite_table().begin(), suite_table().end(), [&](const auto& e) { return e.first == suite; });
    if (it == suite_table().end()) throw std::invalid_argument("unknown verification suite: " + suite);
    it->second(cfg, rep);
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Json to_json(const VerificationReport& r, bool include_time) {
  Json j = Json::object();
  j["suite"] = r.suite;
  j["parameters"] = r.parameters;
  j["pointsChecked"] = r.points_checked;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(to_json(x));
  j["violations"] = v;
  if (include_time) j["wallTime"] = r.wall_time;
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) {
      Json pj = to_json(p, include_time);
      pj.erase("violations");
      pj["violationCount"] = p.violations.size();
      parts.push_back(pj);
    }
    j["suites"] = parts;
  }
  return j;
}

}  // namespace gtseq
