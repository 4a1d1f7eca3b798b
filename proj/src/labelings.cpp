#include "gtseq/labelings.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtseq {
namespace {

void require_order(const NTree& t, const Point& k) {
  if (static_cast<int>(k.size()) != t.order()) {
    throw std::invalid_argument("labeling length " + std::to_string(k.size()) + " does not match tree order " +
                                std::to_string(t.order()));
  }
}

int vertex_label(const Point& k, int v) { return k[static_cast<std::size_t>(v - 1)] + v; }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Visits every tuple drawing one element from each candidate list.
template <class F>
void for_each_choice(const std::vector<std::vector<int>>& lists, F&& f) {
  std::vector<Range> idx;
  idx.reserve(lists.size());
  for (const auto& l : lists) idx.push_back({0, static_cast<int>(l.size()) - 1});
  Point pick(lists.size());
  for_each_in_box(idx, [&](const Point& i) {
    for (std::size_t t = 0; t < lists.size(); ++t) pick[t] = lists[t][static_cast<std::size_t>(i[t])];
    f(static_cast<const Point&>(pick));
  });
}

std::vector<int> level_signs(const TreeSequence& ts) {
  std::vector<int> s;
  for (const NTree& t : ts.trees()) s.push_back(tree_sign(t).sign);
  return s;
}

}  // namespace

EdgeBox admissible_box(const NTree& t, const Point& k) {
  require_order(t, k);
  EdgeBox box;
  for (int j = 1; j < t.order(); ++j) {
    const Edge& e = t.edge(j);
    const int a = vertex_label(k, e.tail);
    const int b = vertex_label(k, e.head);
    if (a == b) {
      box.empty = true;
      box.ranges.push_back({0, -1});
      continue;
    }
    if (a < b) {
      box.ranges.push_back({a - j, b - 1 - j});
    } else {
      box.ranges.push_back({b - j, a - 1 - j});
      box.inversions.push_back(j);
    }
  }
  return box;
}

std::vector<AdmissibleLabeling> admissible_labelings(const NTree& t, const Point& k) {
  std::vector<AdmissibleLabeling> out;
  EdgeBox box = admissible_box(t, k);
  if (box.empty) return out;
  for_each_in_box(box.ranges, [&](const Point& l) { out.push_back({l, box.inversions}); });
  return out;
}

void enumerate_sequences(const TreeSequence& ts, const Point& k,
                         const std::function<void(const GTTreeSequence&)>& visit) {
  const int n = ts.order();
  if (static_cast<int>(k.size()) != n) throw std::invalid_argument("enumerate_sequences: length mismatch");
  GTTreeSequence cur;
  cur.levels.resize(static_cast<std::size_t>(n));
  cur.inversions.resize(static_cast<std::size_t>(n));
  cur.levels[static_cast<std::size_t>(n - 1)] = k;
  const auto signs = level_signs(ts);

  std::function<void(int, int)> descend = [&](int m, int sign) {
    if (m == 1) {
      cur.sign = sign;
      visit(cur);
      return;
    }
    const Point& here = cur.levels[static_cast<std::size_t>(m - 1)];
    EdgeBox box = admissible_box(ts.tree(m), here);
    if (box.empty) return;
    cur.inversions[static_cast<std::size_t>(m - 1)] = box.inversions;
    const int s = sign * signs[static_cast<std::size_t>(m - 1)] * parity_sign(static_cast<long>(box.inversions.size()));
    for_each_in_box(box.ranges, [&](const Point& l) {
      cur.levels[static_cast<std::size_t>(m - 2)] = l;
      descend(m - 1, s);
    });
  };
  descend(n, signs[0]);
}

std::vector<GTTreeSequence> all_sequences(const TreeSequence& ts, const Point& k) {
  std::vector<GTTreeSequence> out;
  enumerate_sequences(ts, k, [&](const GTTreeSequence& s) { out.push_back(s); });
  return out;
}

bool has_distinct_edge_labels(const Point& l) {
  std::vector<int> labels;
  for (std::size_t j = 0; j < l.size(); ++j) labels.push_back(l[j] + static_cast<int>(j) + 1);
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

SignedCounter::SignedCounter(TreeSequence ts, std::optional<int> distinct_level)
    : ts_(std::move(ts)), distinct_(distinct_level), tree_signs_(level_signs(ts_)),
      memo_(static_cast<std::size_t>(ts_.order()) + 1) {
  if (distinct_ && (*distinct_ < 2 || *distinct_ > ts_.order())) {
    throw std::invalid_argument("distinct level must lie in 2..n");
  }
}

std::size_t SignedCounter::memo_size() const {
  std::size_t s = 0;
  for (const auto& m : memo_) s += m.size();
  return s;
}

BigInt SignedCounter::count(const Point& k) { return count_level(static_cast<int>(k.size()), k); }

BigInt SignedCounter::count_level(int m, const Point& k) {
  if (m < 1 || m > ts_.order() || static_cast<int>(k.size()) != m) {
    throw std::invalid_argument("SignedCounter: level/labeling mismatch");
  }
  if (m == 1) return 1;
  auto& memo = memo_[static_cast<std::size_t>(m)];
  if (auto it = memo.find(k); it != memo.end()) return it->second;

  BigInt total = 0;
  EdgeBox box = admissible_box(ts_.tree(m), k);
  if (!box.empty) {
    const bool filter = distinct_ && *distinct_ == m;
    for_each_in_box(box.ranges, [&](const Point& l) {
      if (filter && !has_distinct_edge_labels(l)) return;
      total += count_level(m - 1, l);
    });
    if (tree_signs_[static_cast<std::size_t>(m - 1)] * parity_sign(static_cast<long>(box.inversions.size())) < 0) {
      total = -total;
    }
  }
  if (cap_ != 0 && stored_ >= cap_) {
    for (auto& level : memo_) level.clear();
    stored_ = 0;
  }
  memo_[static_cast<std::size_t>(m)].emplace(k, total);
  ++stored_;
  return total;
}

BigInt signed_count(const TreeSequence& ts, const Point& k) {
  SignedCounter c(ts);
  return c.count(k);
}

std::vector<WeakAdmissibleWitness> weak_r_admissible(const NTree& t, const Point& k,
                                                     const std::vector<int>& r_set) {
  require_order(t, k);
  const int n = t.order();
  const std::vector<int> R = sorted_unique(r_set);
  for (int r : R) {
    if (r < 1 || r > n) throw std::invalid_argument("weak_r_admissible: vertex out of range");
  }
  auto in_r = [&](int v) { return std::binary_search(R.begin(), R.end(), v); };

  std::vector<std::vector<int>> incident;
  for (int r : R) incident.push_back(t.incident_edges(r));

  std::vector<WeakAdmissibleWitness> out;
  for_each_choice(incident, [&](const Point& choice) {
    std::map<int, int> pinned;
    std::map<int, std::vector<int>> pinners;
    for (std::size_t a = 0; a < R.size(); ++a) {
      const int e = choice[a];
      const int value = vertex_label(k, R[a]);
      auto [it, fresh] = pinned.emplace(e, value);
      if (!fresh && it->second != value) return;
      pinners[e].push_back(R[a]);
    }

    std::vector<std::vector<int>> values;
    for (int j = 1; j < n; ++j) {
      if (auto it = pinned.find(j); it != pinned.end()) {
        values.push_back({it->second});
        continue;
      }
      const Edge& e = t.edge(j);
      const int a = vertex_label(k, e.tail);
      const int b = vertex_label(k, e.head);
      std::vector<int> v;
      for (int x = std::min(a, b); x < std::max(a, b); ++x) {
        if ((in_r(e.tail) && x == a) || (in_r(e.head) && x == b)) continue;
        v.push_back(x);
      }
      values.push_back(std::move(v));
    }

    std::vector<int> shared;
    for (const auto& [e, who] : pinners) {
      if (who.size() == 2) shared.push_back(e);
    }

    for_each_choice(values, [&](const Point& labels) {
      for (std::size_t a = 0; a < R.size(); ++a) {
        int hits = 0;
        for (int e : incident[a]) hits += labels[static_cast<std::size_t>(e - 1)] == vertex_label(k, R[a]);
        if (hits != 1) return;
      }
      std::vector<std::vector<int>> dom_options;
      for (int e : shared) dom_options.push_back(pinners[e]);
      for_each_choice(dom_options, [&](const Point& dom) {
        WeakAdmissibleWitness w;
        for (std::size_t s = 0; s < shared.size(); ++s) w.dominating[shared[s]] = dom[s];
        auto max_end = [&](int j) {
          const Edge& e = t.edge(j);
          const int a = vertex_label(k, e.tail);
          const int b = vertex_label(k, e.head);
          if (a != b) return a > b ? e.tail : e.head;
          if (auto it = w.dominating.find(j); it != w.dominating.end()) return it->second;
          return pinners.at(j).front();
        };
        int sign = 1;
        for (int j = 1; j < n; ++j) {
          if (t.edge(j).tail == max_end(j)) sign = -sign;
        }
        for (std::size_t a = 0; a < R.size(); ++a) {
          const int e = choice[a];
          w.assignment[R[a]] = e;
          if (max_end(e) != R[a]) sign = -sign;  // r is the minimum of its edge
        }
        w.sign = sign;
        w.injective = shared.empty();
        w.l.resize(labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) w.l[j] = labels[j] - static_cast<int>(j) - 1;
        out.push_back(std::move(w));
      });
    });
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.l != b.l) return a.l < b.l;
    return a.dominating < b.dominating;
  });
  return out;
}

std::vector<WeakEdgeWitness> weak_edge_admissible(const NTree& t, const Point& k,
                                                  const std::vector<int>& edge_set) {
  require_order(t, k);
  const int n = t.order();
  const std::vector<int> Rp = sorted_unique(edge_set);
  for (int r : Rp) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("weak_edge_admissible: edge out of range");
  }
  std::vector<std::vector<int>> ends;
  for (int r : Rp) ends.push_back({t.edge(r).tail, t.edge(r).head});

  std::vector<WeakEdgeWitness> out;
  for_each_choice(ends, [&](const Point& targets) {
    std::map<int, int> target;
    for (std::size_t a = 0; a < Rp.size(); ++a) target[Rp[a]] = targets[a];
    std::vector<Range> box;
    for (int j = 1; j < n; ++j) {
      if (auto it = target.find(j); it != target.end()) {
        const int v = vertex_label(k, it->second);
        box.push_back({v, v});
        continue;
      }
      const Edge& e = t.edge(j);
      const int a = vertex_label(k, e.tail);
      const int b = vertex_label(k, e.head);
      box.push_back({std::min(a, b), std::max(a, b) - 1});
    }
    int sign = 1;
    for (int j = 1; j < n; ++j) {
      const Edge& e = t.edge(j);
      const int a = vertex_label(k, e.tail);
      const int b = vertex_label(k, e.head);
      const auto tg = target.find(j);
      if (a == b && tg == target.end()) return;  // empty admissible range
      const int mx = a != b ? (a > b ? e.tail : e.head) : tg->second;
      if (e.tail == mx) sign = -sign;
      if (tg != target.end() && tg->second != mx) sign = -sign;
    }
    for_each_in_box(box, [&](const Point& labels) {
      WeakEdgeWitness w;
      w.target = target;
      w.sign = sign;
      w.l.resize(labels.size());
      for (std::size_t j = 0; j < labels.size(); ++j) w.l[j] = labels[j] - static_cast<int>(j) - 1;
      out.push_back(std::move(w));
    });
  });
  return out;
}

RestrictedCounter::RestrictedCounter(TreeSequence ts, RestrictionSpec spec)
    : ts_(std::move(ts)), spec_(std::move(spec)),
      lower_(ts_, spec_.distinct_level && *spec_.distinct_level < spec_.level ? spec_.distinct_level : std::nullopt),
      tree_signs_(level_signs(ts_)), memo_(static_cast<std::size_t>(ts_.order()) + 1) {
  const int n = ts_.order();
  const int m = spec_.level;
  if (m < 1 || m > n) throw std::invalid_argument("restriction level must lie in 1..n");
  spec_.set = sorted_unique(spec_.set);
  switch (spec_.mode) {
    case RestrictionMode::kVertexSet:
      for (int r : spec_.set) {
        if (r < 1 || r > m) throw std::invalid_argument("vertex set must lie in 1..m");
      }
      break;
    case RestrictionMode::kEdgeSet:
      for (int r : spec_.set) {
        if (r < 1 || r > m - 1) throw std::invalid_argument("edge set must lie in 1..m-1");
      }
      break;
    case RestrictionMode::kSize:
      if (spec_.size < 0 || spec_.size > m) throw std::invalid_argument("subset size must lie in 0..m");
      break;
  }
  if (spec_.distinct_level && (*spec_.distinct_level < 2 || *spec_.distinct_level > m)) {
    throw std::invalid_argument("distinct level must lie in 2..m");
  }
}

BigInt RestrictedCounter::count(const Point& k) {
  if (static_cast<int>(k.size()) != ts_.order()) throw std::invalid_argument("RestrictedCounter: length mismatch");
  return level_value(ts_.order(), k);
}

BigInt RestrictedCounter::level_value(int j, const Point& k) {
  if (j == spec_.level) return restricted_level(k);
  auto& memo = memo_[static_cast<std::size_t>(j)];
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  BigInt total = 0;
  EdgeBox box = admissible_box(ts_.tree(j), k);
  if (!box.empty) {
    for_each_in_box(box.ranges, [&](const Point& l) { total += level_value(j - 1, l); });
    if (tree_signs_[static_cast<std::size_t>(j - 1)] * parity_sign(static_cast<long>(box.inversions.size())) < 0) {
      total = -total;
    }
  }
  memo.emplace(k, total);
  return total;
}

BigInt RestrictedCounter::restricted_level(const Point& k) {
  const int m = spec_.level;
  auto& memo = memo_[static_cast<std::size_t>(m)];
  if (auto it = memo.find(k); it != memo.end()) return it->second;

  const NTree& t = ts_.tree(m);
  const bool filter = spec_.distinct_level && *spec_.distinct_level == m;
  BigInt total = 0;
  auto add = [&](const Point& l, int sign) {
    if (filter && !has_distinct_edge_labels(l)) return;
    BigInt below = m >= 2 ? lower_.count_level(m - 1, l) : BigInt(1);
    if (sign < 0) total -= below; else total += below;
  };
  auto add_vertex_set = [&](const std::vector<int>& R) {
    for (const auto& w : weak_r_admissible(t, k, R)) add(w.l, w.sign);
  };
  switch (spec_.mode) {
    case RestrictionMode::kVertexSet:
      add_vertex_set(spec_.set);
      break;
    case RestrictionMode::kSize:
      for (const auto& R : subsets_of_size(m, spec_.size)) add_vertex_set(R);
      break;
    case RestrictionMode::kEdgeSet:
      for (const auto& w : weak_edge_admissible(t, k, spec_.set)) add(w.l, w.sign);
      break;
  }
  if (tree_signs_[static_cast<std::size_t>(m - 1)] < 0) total = -total;
  memo.emplace(k, total);
  return total;
}

BigInt signed_count_restricted(const TreeSequence& ts, const Point& k, const RestrictionSpec& spec) {
  RestrictedCounter c(ts, spec);
  return c.count(k);
}

}  // namespace gtseq
