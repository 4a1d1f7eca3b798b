// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails. Optional argument: path of the gtseq executable, used for
// the end-to-end `verify all` criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gtseq/monotone.hpp"
#include "gtseq/verify.hpp"

using namespace gtseq;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t points = 0;
  std::size_t violations = 0;
  std::string note;
};

void add(Outcome& o, const VerificationReport& r) {
  o.points += r.points_checked;
  o.violations += r.violations.size();
  o.ok = o.ok && r.ok();
  if (!r.ok() && o.note.empty()) {
    const auto& v = r.violations.front();
    o.note = r.suite + ": " + v.what + " at " + point_to_string(v.point);
  }
}

Outcome suites(const std::vector<std::string>& names, const VerifyConfig& cfg = {}) {
  Outcome o;
  for (const auto& n : names) add(o, run_suite(n, cfg));
  return o;
}

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || secs <= budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line << (pass ? "PASS " : "FAIL ") << name << " (checks=" << o.points << ", violations=" << o.violations;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << ", time=" << secs << "s";
  if (budget_s > 0) line << " of " << budget_s << "s";
  if (!in_time) line << ", over budget";
  if (!o.note.empty()) line << ", " << o.note;
  line << ")";
  std::cout << line.str() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  criterion("theorem-main: signed count equals the product formula, n<=4, 5 random sequences, k in {-2..2}^n", 300,
            [] { return suites({"theorem-main"}); });

  criterion("formula: binomial determinant equals the product formula, k in {-3..3}^n, n<=5", 60,
            [] { return suites({"formula"}); });

  criterion("shift-antisymmetry and independence on the theorem-main grid", 0,
            [] { return suites({"shift-antisym", "independence"}); });

  criterion("operator annihilation: Delta^n and e_rho(Delta), e_rho(delta) kill L and alpha on {-2..2}^n, n<=4", 0,
            [] { return suites({"delta-n", "e-rho"}); });

  criterion("restricted counts: finite differences and edge restrictions match, distinct labels and "
            "rho-sized restrictions, {-1..1}^n, n<=4",
            0, [] { return suites({"prop-first", "prop-second", "distinct", "rho-zero"}); });

  criterion("monotone agreement: recursion against every extension and operator form; alpha(n;1..n)=1,2,7,42", 0,
            [] { return suites({"extensions-agree"}); });

  criterion("refined counts: routes agree, (2,3,2), (7,14,14,7), linear system, symmetry, doubly refined identity",
            0, [] {
              Outcome o = suites({"refined", "doubly-refined"});
              for (int n = 1; n <= 4; ++n) {
                const auto r = refined_asm(n);
                for (int i = 0; i < n; ++i) {
                  ++o.points;
                  if (r.route_c[i] != r.route_c[n - 1 - i]) {
                    o.ok = false;
                    ++o.violations;
                    o.note = "A_{n,i} != A_{n,n+1-i}";
                  }
                }
              }
              return o;
            });

  criterion("reflection property of alpha with the (-1)^(n-1) factor, {-2..2}^n, n<=4", 0, [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      PropertyReport r = check_alpha_property(AlphaProperty::kP3, n, {-2, 2});
      o.points += r.points_checked;
      o.violations += r.violations.size();
      if (!r.violations.empty()) {
        o.ok = false;
        o.note = "P3 at " + point_to_string(r.violations.front().point);
      }
    }
    return o;
  });

  criterion("paths: classic families for weakly increasing k in {0..3}^n and calibrated general families on "
            "{-2..2}^n, n<=3",
            0, [] { return suites({"paths"}); });

  criterion("intervals: both symmetric-difference identities and the dichotomy on {-5..5}^3; four-set "
            "decomposition for n=3",
            0, [] {
              Outcome o = suites({"intervals"});
              VerifyConfig three;
              three.n = 3;
              add(o, run_suite("decomposition", three));
              return o;
            });

  criterion("verify all at default bounds exits 0", 900, [&] {
    Outcome o;
    if (argc > 1) {
      const std::string cmd = std::string("\"") + argv[1] + "\" verify all > /dev/null";
      const int status = std::system(cmd.c_str());
      o.ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
      o.note = "exit status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
    } else {
      add(o, run_suite("all"));
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
