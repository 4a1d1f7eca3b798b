#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtseq/bigint.hpp"

namespace gtseq {

enum class Step { kE, kN, kSE, kS };  // (1,0), (0,1), (1,-1), (0,-1)
const char* step_name(Step s);
Step parse_step(const std::string& name);

struct LatticePath {
  int x0 = 0;
  int y0 = 0;
  std::vector<Step> steps;
  /// Every visited lattice point, start included.
  std::vector<std::pair<int, int>> points() const;
  int se_steps() const;
};

struct PathFamily {
  std::vector<int> pi;  // path i (1-based) ends at end point pi[i-1]
  std::vector<LatticePath> paths;
  int sign = 1;
};

enum class PathVariant { kClassic, kGeneral };
PathVariant parse_path_variant(const std::string& name);

/// How a path from (-i+1, i-1) reaches an end point (0, y) in the general
/// variant. kBelowAxis is the frozen reading; the others exist for calibration.
///   kBelowAxis:       y >= 0: east/north steps. y < 0: one (0,-1) step, then
///                     only (1,-1) and (0,-1) steps.
///   kBelowStart:      as kBelowAxis, but the down-step rule applies whenever
///                     y is below the start height.
///   kNoLeadingSouth:  y < 0: only (1,-1) and (0,-1) steps, no forced first step.
enum class StepGrammar { kBelowAxis, kBelowStart, kNoLeadingSouth };
StepGrammar parse_step_grammar(const std::string& name);
std::string to_string(StepGrammar g);

/// All paths from (x0, y0) to (0, y) under the variant's step rules.
std::vector<LatticePath> paths_between(int x0, int y0, int y, PathVariant v,
                                       StepGrammar g = StepGrammar::kBelowAxis);

/// Streams all families for k: start i = (-i+1, i-1) joined to end point
/// pi_i = (0, k_{pi_i} + pi_i - 1), over every permutation pi.
void enumerate_families(const Point& k, PathVariant v, const std::function<void(const PathFamily&)>& visit,
                        StepGrammar g = StepGrammar::kBelowAxis);

/// Signed sum over all families; equals the product formula.
BigInt signed_families(const Point& k, PathVariant v, StepGrammar g = StepGrammar::kBelowAxis);

/// Vertex-disjoint families joining start i to (1, k_i + i - 1) with a final
/// east step. Needs 0 <= k_1 <= ... <= k_n.
BigInt count_nonintersecting(const Point& k);
/// The same families, listed.
std::vector<PathFamily> nonintersecting_families(const Point& k);

/// The LGV involution: take the smallest path index i that meets another path,
/// its first vertex v shared with another path, and the smallest j != i through
/// v; exchange the tails after v. Returns nothing for non-intersecting families.
std::optional<PathFamily> lgv_tail_swap(const PathFamily& f);

/// Recomputes sgn(pi) * (-1)^{#(1,-1) steps}.
int family_sign(const PathFamily& f);

bool is_intersecting(const PathFamily& f);

std::string family_to_svg(const PathFamily& f);

}  // namespace gtseq
