#include "gtseq/paths.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gtseq/trees.hpp"

namespace gtseq {
namespace {

std::pair<int, int> delta_of(Step s) {
  switch (s) {
    case Step::kE: return {1, 0};
    case Step::kN: return {0, 1};
    case Step::kSE: return {1, -1};
    case Step::kS: return {0, -1};
  }
  return {0, 0};
}

// Sequences of `a` copies of first and `b` copies of second, first-before-second order.
void interleavings(int a, Step first, int b, Step second, std::vector<Step>& prefix,
                   std::vector<std::vector<Step>>& out) {
  if (a == 0 && b == 0) {
    out.push_back(prefix);
    return;
  }
  if (a > 0) {
    prefix.push_back(first);
    interleavings(a - 1, first, b, second, prefix, out);
    prefix.pop_back();
  }
  if (b > 0) {
    prefix.push_back(second);
    interleavings(a, first, b - 1, second, prefix, out);
    prefix.pop_back();
  }
}

std::vector<LatticePath> build(int x0, int y0, std::vector<Step> prefix, int a, Step first, int b, Step second) {
  std::vector<LatticePath> out;
  if (a < 0 || b < 0) return out;
  std::vector<std::vector<Step>> tails;
  std::vector<Step> scratch;
  interleavings(a, first, b, second, scratch, tails);
  for (auto& t : tails) {
    LatticePath p{x0, y0, prefix};
    p.steps.insert(p.steps.end(), t.begin(), t.end());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const char* step_name(Step s) {
  switch (s) {
    case Step::kE: return "E";
    case Step::kN: return "N";
    case Step::kSE: return "SE";
    case Step::kS: return "S";
  }
  return "?";
}

Step parse_step(const std::string& name) {
  if (name == "E") return Step::kE;
  if (name == "N") return Step::kN;
  if (name == "SE") return Step::kSE;
  if (name == "S") return Step::kS;
  throw std::invalid_argument("unknown step: " + name);
}

std::vector<std::pair<int, int>> LatticePath::points() const {
  std::vector<std::pair<int, int>> pts{{x0, y0}};
  for (Step s : steps) {
    auto [dx, dy] = delta_of(s);
    pts.emplace_back(pts.back().first + dx, pts.back().second + dy);
  }
  return pts;
}

int LatticePath::se_steps() const { return static_cast<int>(std::count(steps.begin(), steps.end(), Step::kSE)); }

PathVariant parse_path_variant(const std::string& name) {
  if (name == "classic") return PathVariant::kClassic;
  if (name == "general") return PathVariant::kGeneral;
  throw std::invalid_argument("unknown path variant: " + name);
}

StepGrammar parse_step_grammar(const std::string& name) {
  if (name == "below-axis") return StepGrammar::kBelowAxis;
  if (name == "below-start") return StepGrammar::kBelowStart;
  if (name == "no-leading-south") return StepGrammar::kNoLeadingSouth;
  throw std::invalid_argument("unknown step grammar: " + name);
}

std::string to_string(StepGrammar g) {
  switch (g) {
    case StepGrammar::kBelowAxis: return "below-axis";
    case StepGrammar::kBelowStart: return "below-start";
    case StepGrammar::kNoLeadingSouth: return "no-leading-south";
  }
  return "?";
}

std::vector<LatticePath> paths_between(int x0, int y0, int y, PathVariant v, StepGrammar g) {
  const int dx = -x0;
  if (dx < 0) throw std::invalid_argument("paths_between: start must lie left of the end column");
  const bool down = v == PathVariant::kGeneral &&
                    (g == StepGrammar::kBelowStart ? y < y0 : y < 0);
  if (!down) return build(x0, y0, {}, dx, Step::kE, y - y0, Step::kN);
  if (g == StepGrammar::kNoLeadingSouth) return build(x0, y0, {}, dx, Step::kSE, (y0 - y) - dx, Step::kS);
  // one forced (0,-1) step, then dx diagonal steps and the remaining drops
  return build(x0, y0, {Step::kS}, dx, Step::kSE, (y0 - 1 - y) - dx, Step::kS);
}

int family_sign(const PathFamily& f) {
  int se = 0;
  for (const auto& p : f.paths) se += p.se_steps();
  return permutation_sign(f.pi) * parity_sign(se);
}

void enumerate_families(const Point& k, PathVariant v, const std::function<void(const PathFamily&)>& visit,
                        StepGrammar g) {
  const int n = static_cast<int>(k.size());
  if (n == 0) throw std::invalid_argument("k must be nonempty");
  if (v == PathVariant::kClassic) {
    for (int x : k) {
      if (x < 0) throw std::invalid_argument("the classic model needs nonnegative k");
    }
  }
  // options[i][j]: paths from start i+1 to end point j+1
  std::vector<std::vector<std::vector<LatticePath>>> options(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      options[static_cast<std::size_t>(i - 1)].push_back(
          paths_between(-i + 1, i - 1, k[static_cast<std::size_t>(j - 1)] + j - 1, v, g));
    }
  }
  PathFamily fam;
  fam.pi.resize(static_cast<std::size_t>(n));
  std::iota(fam.pi.begin(), fam.pi.end(), 1);
  fam.paths.resize(static_cast<std::size_t>(n));
  do {
    const int psign = permutation_sign(fam.pi);
    std::function<void(int, int)> choose = [&](int i, int se) {
      if (i == n) {
        fam.sign = psign * parity_sign(se);
        visit(fam);
        return;
      }
      for (const auto& p : options[static_cast<std::size_t>(i)][static_cast<std::size_t>(fam.pi[static_cast<std::size_t>(i)] - 1)]) {
        fam.paths[static_cast<std::size_t>(i)] = p;
        choose(i + 1, se + p.se_steps());
      }
    };
    choose(0, 0);
  } while (std::next_permutation(fam.pi.begin(), fam.pi.end()));
}

BigInt signed_families(const Point& k, PathVariant v, StepGrammar g) {
  BigInt total = 0;
  enumerate_families(k, v, [&](const PathFamily& f) { total += f.sign; }, g);
  return total;
}

bool is_intersecting(const PathFamily& f) {
  std::set<std::pair<int, int>> seen;
  for (const auto& p : f.paths) {
    for (const auto& pt : p.points()) {
      if (!seen.insert(pt).second) return true;
    }
  }
  return false;
}

std::vector<PathFamily> nonintersecting_families(const Point& k) {
  const int n = static_cast<int>(k.size());
  if (n == 0) throw std::invalid_argument("k must be nonempty");
  if (k[0] < 0 || !std::is_sorted(k.begin(), k.end())) {
    throw std::invalid_argument("count_nonintersecting needs 0 <= k_1 <= ... <= k_n");
  }
  const int y_lo = 0;  // classic paths start on or above the x-axis and never step down
  const int y_hi = *std::max_element(k.begin(), k.end()) + n;
  std::vector<PathFamily> out;
  PathFamily fam;
  fam.pi.resize(static_cast<std::size_t>(n));
  std::iota(fam.pi.begin(), fam.pi.end(), 1);
  fam.paths.resize(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> used;
  std::function<void(int)> choose = [&](int i) {
    if (i == n) {
      fam.sign = 1;
      out.push_back(fam);
      return;
    }
    const int y = k[static_cast<std::size_t>(i)] + i;
    for (auto p : paths_between(-i, i, y, PathVariant::kClassic)) {
      p.steps.push_back(Step::kE);
      auto pts = p.points();
      bool clash = false;
      for (const auto& pt : pts) {
        if (pt.first < -n + 1 || pt.first > 1 || pt.second < y_lo || pt.second > y_hi) {
          throw std::logic_error("lattice path left the bounding box");
        }
        if (used.count(pt)) clash = true;
      }
      if (clash) continue;
      for (const auto& pt : pts) used.insert(pt);
      fam.paths[static_cast<std::size_t>(i)] = std::move(p);
      choose(i + 1);
      for (const auto& pt : pts) used.erase(pt);
    }
  };
  choose(0);
  return out;
}

BigInt count_nonintersecting(const Point& k) { return BigInt(nonintersecting_families(k).size()); }

std::optional<PathFamily> lgv_tail_swap(const PathFamily& f) {
  const std::size_t n = f.paths.size();
  std::vector<std::vector<std::pair<int, int>>> pts;
  for (const auto& p : f.paths) pts.push_back(p.points());
  std::map<std::pair<int, int>, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& pt : pts[i]) {
      auto& o = owners[pt];
      if (o.empty() || o.back() != i) o.push_back(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < pts[i].size(); ++a) {
      const auto& o = owners[pts[i][a]];
      if (o.size() < 2) continue;
      const std::size_t j = o[0] != i ? o[0] : o[1];
      // position of the shared vertex along path j
      std::size_t b = 0;
      while (pts[j][b] != pts[i][a]) ++b;
      PathFamily g = f;
      auto& pi_steps = g.paths[i].steps;
      auto& pj_steps = g.paths[j].steps;
      std::vector<Step> tail_i(f.paths[i].steps.begin() + static_cast<long>(a), f.paths[i].steps.end());
      std::vector<Step> tail_j(f.paths[j].steps.begin() + static_cast<long>(b), f.paths[j].steps.end());
      pi_steps.resize(a);
      pi_steps.insert(pi_steps.end(), tail_j.begin(), tail_j.end());
      pj_steps.resize(b);
      pj_steps.insert(pj_steps.end(), tail_i.begin(), tail_i.end());
      std::swap(g.pi[i], g.pi[j]);
      g.sign = family_sign(g);
      return g;
    }
  }
  return std::nullopt;
}

std::string family_to_svg(const PathFamily& f) {
  int xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (const auto& p : f.paths) {
    for (auto [x, y] : p.points()) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const int unit = 40;
  const int pad = 20;
  const int w = (xmax - xmin) * unit + 2 * pad;
  const int h = (ymax - ymin) * unit + 2 * pad;
  auto sx = [&](int x) { return pad + (x - xmin) * unit; };
  auto sy = [&](int y) { return pad + (ymax - y) * unit; };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  svg << "  <line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"" << w << "\" y2=\"" << sy(0)
      << "\" stroke=\"#ccc\" stroke-dasharray=\"4\"/>\n";
  for (std::size_t i = 0; i < f.paths.size(); ++i) {
    svg << "  <polyline fill=\"none\" stroke-width=\"3\" stroke=\"" << colors[i % 6] << "\" points=\"";
    for (auto [x, y] : f.paths[i].points()) svg << sx(x) << "," << sy(y) << " ";
    svg << "\"/>\n";
    auto start = f.paths[i].points().front();
    svg << "  <circle cx=\"" << sx(start.first) << "\" cy=\"" << sy(start.second) << "\" r=\"4\"/>\n";
  }
  svg << "  <text x=\"" << pad << "\" y=\"14\" font-size=\"12\">sign " << f.sign << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gtseq
