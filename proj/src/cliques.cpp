#include "leadtrack/cliques.hpp"

#include <algorithm>
#include <iterator>

namespace leadtrack {
namespace {

using Local = std::uint32_t;
using LocalSet = std::vector<Local>;

LocalSet intersect(const LocalSet& a, std::span<const Local> b) {
  LocalSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class PivotSearch {
 public:
  PivotSearch(const SnapshotGraph& g, const CliqueVisitor& visit) : g_(g), visit_(visit) {}

  // Returns false once the visitor asks to stop.
  bool run(Local start, LocalSet candidates, LocalSet excluded) {
    clique_.assign(1, start);
    return extend(std::move(candidates), std::move(excluded));
  }

 private:
  bool extend(LocalSet candidates, LocalSet excluded) {
    if (candidates.empty()) {
      if (!excluded.empty()) return true;
      return report();
    }

    const Local pivot = choose_pivot(candidates, excluded);
    const auto pivot_row = g_.neighbor_indices_at(pivot);
    LocalSet branch;
    std::set_difference(candidates.begin(), candidates.end(), pivot_row.begin(), pivot_row.end(),
                        std::back_inserter(branch));

    for (Local v : branch) {
      const auto row = g_.neighbor_indices_at(v);
      clique_.push_back(v);
      const bool keep_going = extend(intersect(candidates, row), intersect(excluded, row));
      clique_.pop_back();
      if (!keep_going) return false;
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
    return true;
  }

  // Tomita: the pivot maximizes |candidates ∩ N(u)| over candidates ∪ excluded.
  Local choose_pivot(const LocalSet& candidates, const LocalSet& excluded) const {
    Local best = candidates.front();
    std::size_t best_score = 0;
    bool first = true;
    auto consider = [&](Local u) {
      const auto row = g_.neighbor_indices_at(u);
      std::size_t score = 0;
      auto i = candidates.begin();
      auto j = row.begin();
      while (i != candidates.end() && j != row.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++score;
          ++i;
          ++j;
        }
      }
      if (first || score > best_score) {
        best = u;
        best_score = score;
        first = false;
      }
    };
    for (Local u : candidates) consider(u);
    for (Local u : excluded) consider(u);
    return best;
  }

  bool report() {
    members_.clear();
    for (Local i : clique_) members_.push_back(g_.node_at(i));
    std::sort(members_.begin(), members_.end());
    return visit_(members_);
  }

  const SnapshotGraph& g_;
  const CliqueVisitor& visit_;
  LocalSet clique_;
  std::vector<NodeId> members_;
};

}  // namespace

std::vector<std::uint32_t> degeneracy_order(const SnapshotGraph& g, std::size_t* degeneracy) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = g.degree_at(i);
    max_deg = std::max(max_deg, deg[i]);
  }

  // Bucket queue keyed by current degree (Matula–Beck).
  std::vector<std::vector<std::uint32_t>> buckets(max_deg + 1);
  for (std::size_t i = n; i-- > 0;) buckets[deg[i]].push_back(static_cast<std::uint32_t>(i));
  std::vector<char> removed(n, 0);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::size_t d = 0;
  std::size_t level = 0;
  while (order.size() < n) {
    while (buckets[level].empty()) ++level;
    const auto v = buckets[level].back();
    buckets[level].pop_back();
    if (removed[v] || deg[v] != level) continue;  // stale entry
    removed[v] = 1;
    order.push_back(v);
    d = std::max(d, level);
    for (auto w : g.neighbor_indices_at(v)) {
      if (removed[w]) continue;
      --deg[w];
      buckets[deg[w]].push_back(w);
    }
    if (level > 0) --level;
  }
  if (degeneracy) *degeneracy = d;
  return order;
}

bool for_each_maximal_clique(const SnapshotGraph& g, const CliqueVisitor& visit) {
  const auto order = degeneracy_order(g);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  PivotSearch search(g, visit);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto v = order[r];
    LocalSet later;
    LocalSet earlier;
    for (auto w : g.neighbor_indices_at(v)) (rank[w] > r ? later : earlier).push_back(w);
    if (!search.run(v, std::move(later), std::move(earlier))) return false;
  }
  return true;
}

std::vector<Clique> maximal_cliques(const SnapshotGraph& g) {
  std::vector<Clique> out;
  for_each_maximal_clique(g, [&](std::span<const NodeId> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> maximal_cliques_containing(const SnapshotGraph& g, NodeId v) {
  const SnapshotGraph ego = ego_network(g, v);
  std::vector<Clique> out;
  for_each_maximal_clique(ego, [&](std::span<const NodeId> c) {
    if (set_contains(c, v)) out.emplace_back(c.begin(), c.end());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace leadtrack
