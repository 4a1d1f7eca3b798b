// Serial reference kernel against the OpenMP kernel on three grid workloads.
// Run with --benchmark_filter=... to pick one; Arg(0) is serial, Arg(1) parallel.

#include <benchmark/benchmark.h>

#include "gtseq/labelings.hpp"
#include "gtseq/monotone.hpp"
#include "gtseq/operators.hpp"
#include "gtseq/verify.hpp"

using namespace gtseq;

namespace {

GridOptions mode_of(const benchmark::State& state) {
  return {state.range(0) == 0 ? ExecutionMode::kSerial : ExecutionMode::kParallel, 0};
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

// Signed counts of five random tree sequences of order 4 against the product.
void BM_SignedCountGrid(benchmark::State& state) {
  const auto seqs = sample_tree_sequences(4, 5, 7);
  const auto pts = grid_points(4, {-3, 3});
  for (auto _ : state) {
    auto out = run_grid(
        pts,
        [&] {
          std::vector<SignedCounter> c;
          for (const auto& ts : seqs) c.emplace_back(ts);
          return c;
        },
        [](std::vector<SignedCounter>& c, const Point& k, std::vector<Violation>& bad) -> std::size_t {
          const BigInt p = product_formula(k);
          for (auto& counter : c) {
            if (counter.count(k) != p) bad.push_back({k, "", 0, 0});
          }
          return c.size();
        },
        mode_of(state));
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<long>(state.iterations() * pts.size()));
  label(state);
}
BENCHMARK(BM_SignedCountGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Fraction-free determinants of order 5.
void BM_DeterminantGrid(benchmark::State& state) {
  const auto pts = grid_points(5, {-3, 3});
  for (auto _ : state) {
    auto out = run_grid(
        pts, [] { return 0; },
        [](int&, const Point& k, std::vector<Violation>& bad) -> std::size_t {
          if (binomial_determinant(k) != product_formula(k)) bad.push_back({k, "", 0, 0});
          return 1;
        },
        mode_of(state));
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<long>(state.iterations() * pts.size()));
  label(state);
}
BENCHMARK(BM_DeterminantGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Fourth-extension counts of order 3, one memo per worker.
void BM_ExtensionGrid(benchmark::State& state) {
  const auto pts = grid_points(3, {-3, 3});
  for (auto _ : state) {
    auto out = run_grid(
        pts, [] { return ExtensionCounter(Extension::kFourth); },
        [](ExtensionCounter& c, const Point& k, std::vector<Violation>& bad) -> std::size_t {
          if (c.count(k) != alpha(k)) bad.push_back({k, "", 0, 0});
          return 1;
        },
        mode_of(state));
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<long>(state.iterations() * pts.size()));
  label(state);
}
BENCHMARK(BM_ExtensionGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
