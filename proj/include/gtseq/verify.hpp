#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtseq/grid.hpp"
#include "gtseq/json_io.hpp"

namespace gtseq {

struct VerifyConfig {
  std::optional<int> n;          // check only this order
  std::optional<int> max_n;      // override the suite's largest order
  std::optional<Range> grid;     // override the suite's default grid
  int trees = 5;                 // random tree sequences per order
  int restricted_trees = 2;      // random tree sequences for the costlier restricted suites
  std::uint64_t seed = 7;
  GridOptions exec;
  std::size_t memo_cap = 0;      // 0: unbounded
};

struct VerificationReport {
  std::string suite;
  Json parameters = Json::object();
  std::size_t points_checked = 0;
  std::vector<Violation> violations;
  double wall_time = 0.0;
  std::vector<VerificationReport> parts;  // filled for "all"

  bool ok() const { return violations.empty(); }
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"). Throws std::invalid_argument for unknown names
/// or bad parameters; identity failures are reported as violations.
VerificationReport run_suite(const std::string& suite, const VerifyConfig& cfg = {});

/// wall_time is omitted when include_time is false, which makes reports of
/// identical runs byte-identical.
Json to_json(const VerificationReport& r, bool include_time = true);

/// Tree sequences used by the suites for order n: `count` seeded random ones
/// (seeds seed, seed+1, ...).
std::vector<TreeSequence> sample_tree_sequences(int n, int count, std::uint64_t seed);

}  // namespace gtseq
