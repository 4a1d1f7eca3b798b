#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "gtseq/bigint.hpp"
#include "gtseq/util.hpp"

namespace gtseq {

enum class ExecutionMode { kSerial, kParallel };

struct GridOptions {
  ExecutionMode mode = ExecutionMode::kParallel;
  int threads = 0;  // 0: OpenMP default
};

/// All points of {lo..hi}^n in lexicographic order.
std::vector<Point> grid_points(int n, Range r);

struct Violation {
  Point point;
  std::string what;  // which identity, with any extra parameters
  BigInt lhs;
  BigInt rhs;
};

struct GridOutcome {
  std::size_t checks = 0;
  std::vector<Violation> violations;
};

/// Runs `check(state, point, violations)` on every point. `check` returns how
/// many individual comparisons it made. Each worker builds its own state with
/// `make_state()`, so memo tables need no locking. Violations come back in
/// point order whatever the schedule, so serial and parallel runs agree.
/// An exception thrown by a worker stops the remaining points of that worker
/// and the first one is rethrown after the parallel region.
template <class MakeState, class Check>
GridOutcome run_grid(const std::vector<Point>& points, MakeState make_state, Check check,
                     const GridOptions& opt = {}) {
  std::vector<std::pair<std::size_t, Violation>> found;
  std::size_t checks = 0;
  const long count = static_cast<long>(points.size());
  if (opt.mode == ExecutionMode::kSerial) {
    auto state = make_state();
    std::vector<Violation> local;
    for (long idx = 0; idx < count; ++idx) {
      local.clear();
      checks += check(state, points[static_cast<std::size_t>(idx)], local);
      for (auto& v : local) found.emplace_back(static_cast<std::size_t>(idx), std::move(v));
    }
  } else {
    const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    std::exception_ptr failure;
#pragma omp parallel num_threads(threads) reduction(+ : checks)
    {
      auto state = make_state();
      std::vector<std::pair<std::size_t, Violation>> mine;
      std::vector<Violation> local;
      std::exception_ptr mine_failure;
#pragma omp for schedule(dynamic, 4)
      for (long idx = 0; idx < count; ++idx) {
        if (mine_failure) continue;
        try {
          local.clear();
          checks += check(state, points[static_cast<std::size_t>(idx)], local);
          for (auto& v : local) mine.emplace_back(static_cast<std::size_t>(idx), std::move(v));
        } catch (...) {
          mine_failure = std::current_exception();
        }
      }
#pragma omp critical(gtseq_grid_merge)
      {
        found.insert(found.end(), std::make_move_iterator(mine.begin()), std::make_move_iterator(mine.end()));
        if (mine_failure && !failure) failure = mine_failure;
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  GridOutcome out;
  out.checks = checks;
  for (auto& f : found) out.violations.push_back(std::move(f.second));
  return out;
}

}  // namespace gtseq
