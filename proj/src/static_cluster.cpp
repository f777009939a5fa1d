#include "leadtrack/static_cluster.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "leadtrack/errors.hpp"

namespace leadtrack {
namespace {

// Weighted graph over community "super nodes". Self-loop weight holds the
// (doubled) internal weight of the aggregated community.
struct WeightedGraph {
  struct Arc {
    std::uint32_t to;
    double weight;
  };
  std::vector<std::vector<Arc>> arcs;
  std::vector<double> self_loop;  // counted twice in strength, like an undirected loop
  double total_weight = 0.0;      // 2m

  std::size_t size() const { return arcs.size(); }
  double strength(std::size_t i) const {
    double s = self_loop[i];
    for (const auto& a : arcs[i]) s += a.weight;
    return s;
  }
};

WeightedGraph from_snapshot(const SnapshotGraph& g) {
  WeightedGraph w;
  w.arcs.resize(g.node_count());
  w.self_loop.assign(g.node_count(), 0.0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    w.arcs[i].reserve(g.degree_at(i));
    for (auto j : g.neighbor_indices_at(i)) w.arcs[i].push_back({j, 1.0});
  }
  w.total_weight = 2.0 * static_cast<double>(g.edge_count());
  return w;
}

double weighted_modularity(const WeightedGraph& w, const std::vector<std::uint32_t>& comm) {
  const std::size_t k = *std::max_element(comm.begin(), comm.end()) + 1;
  std::vector<double> internal(k, 0.0), total(k, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    internal[comm[i]] += w.self_loop[i];
    total[comm[i]] += w.strength(i);
    for (const auto& a : w.arcs[i]) {
      if (comm[a.to] == comm[i]) internal[comm[i]] += a.weight;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    q += internal[c] / w.total_weight - (total[c] / w.total_weight) * (total[c] / w.total_weight);
  }
  return q;
}

// One round of local moving. Returns true if any node changed community.
bool move_nodes(const WeightedGraph& w, std::vector<std::uint32_t>& comm, std::mt19937_64& rng) {
  const std::size_t n = w.size();
  std::vector<double> strength(n), community_total(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    strength[i] = w.strength(i);
    community_total[comm[i]] += strength[i];
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> link_weight(n, 0.0);
  std::vector<char> is_touched(n, 0);
  std::vector<std::uint32_t> touched;
  const double m2 = w.total_weight;
  bool any_move = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (auto i : order) {
      const auto home = comm[i];
      touched.assign(1, home);
      is_touched[home] = 1;
      for (const auto& a : w.arcs[i]) {
        const auto c = comm[a.to];
        if (!is_touched[c]) {
          is_touched[c] = 1;
          touched.push_back(c);
        }
        link_weight[c] += a.weight;
      }
      community_total[home] -= strength[i];

      // Gain of joining c, up to a node-constant term: k_i,c - tot_c k_i / 2m.
      auto gain = [&](std::uint32_t c) { return link_weight[c] - community_total[c] * strength[i] / m2; };
      std::uint32_t best = home;
      double best_gain = gain(home);
      for (auto c : touched) {
        const double g = gain(c);
        if (g > best_gain + 1e-12) {
          best = c;
          best_gain = g;
        }
      }
      community_total[best] += strength[i];
      comm[i] = best;
      if (best != home) {
        improved = true;
        any_move = true;
      }
      for (auto c : touched) {
        link_weight[c] = 0.0;
        is_touched[c] = 0;
      }
    }
  }
  return any_move;
}

// Relabels communities to 0..k-1 in order of first appearance.
std::size_t compact(std::vector<std::uint32_t>& comm) {
  std::vector<std::uint32_t> remap(comm.size(), ~std::uint32_t{0});
  std::uint32_t next = 0;
  for (auto& c : comm) {
    if (remap[c] == ~std::uint32_t{0}) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

WeightedGraph aggregate(const WeightedGraph& w, const std::vector<std::uint32_t>& comm, std::size_t k) {
  WeightedGraph out;
  out.arcs.resize(k);
  out.self_loop.assign(k, 0.0);
  out.total_weight = w.total_weight;
  std::vector<double> acc(k, 0.0);
  std::vector<std::uint32_t> touched;
  std::vector<std::vector<std::uint32_t>> members(k);
  for (std::size_t i = 0; i < w.size(); ++i) members[comm[i]].push_back(static_cast<std::uint32_t>(i));
  for (std::size_t c = 0; c < k; ++c) {
    touched.clear();
    for (auto i : members[c]) {
      out.self_loop[c] += w.self_loop[i];
      for (const auto& a : w.arcs[i]) {
        const auto d = comm[a.to];
        if (d == c) {
          out.self_loop[c] += a.weight;
          continue;
        }
        if (acc[d] == 0.0) touched.push_back(d);
        acc[d] += a.weight;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto d : touched) {
      out.arcs[c].push_back({d, acc[d]});
      acc[d] = 0.0;
    }
  }
  return out;
}

}  // namespace

double modularity(const SnapshotGraph& g, std::span<const NodeSet> partition) {
  std::vector<std::uint32_t> comm(g.node_count(), ~std::uint32_t{0});
  std::size_t covered = 0;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    for (NodeId v : partition[c]) {
      const auto idx = g.index_of(v);
      if (!idx) throw ContractError("modularity: node " + std::to_string(v) + " not in graph");
      if (comm[*idx] != ~std::uint32_t{0}) throw ContractError("modularity: communities overlap");
      comm[*idx] = static_cast<std::uint32_t>(c);
      ++covered;
    }
  }
  if (covered != g.node_count()) throw ContractError("modularity: partition does not cover the graph");
  if (g.edge_count() == 0) throw UndefinedValueError("modularity: graph has no edges");

  const double m = static_cast<double>(g.edge_count());
  std::vector<double> internal(partition.size(), 0.0), total(partition.size(), 0.0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    total[comm[i]] += static_cast<double>(g.degree_at(i));
    for (auto j : g.neighbor_indices_at(i)) {
      if (i < j && comm[i] == comm[j]) internal[comm[i]] += 1.0;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const double share = total[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

StaticPartition cluster_static(const SnapshotGraph& g, std::uint64_t seed) {
  StaticPartition result;
  const std::size_t n = g.node_count();
  if (n == 0) return result;

  std::vector<std::uint32_t> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0);

  if (g.edge_count() > 0) {
    std::mt19937_64 rng(seed);
    WeightedGraph level = from_snapshot(g);
    std::vector<std::uint32_t> comm(n);
    std::iota(comm.begin(), comm.end(), 0);
    while (true) {
      const bool moved = move_nodes(level, comm, rng);
      const std::size_t k = compact(comm);
      for (auto& a : assignment) a = comm[a];
      result.level_modularity.push_back(weighted_modularity(level, comm));
      if (!moved || k == level.size()) break;
      level = aggregate(level, comm, k);
      comm.resize(k);
      std::iota(comm.begin(), comm.end(), 0);
    }
  }

  const std::size_t k = compact(assignment);
  result.communities.assign(k, {});
  for (std::size_t i = 0; i < n; ++i) result.communities[assignment[i]].push_back(g.node_at(i));
  // compact() numbered communities by first member, and nodes are visited in
  // NodeId order, so sets are already sorted and ordered by smallest member.
  result.modularity = g.edge_count() > 0 ? modularity(g, result.communities) : 0.0;
  return result;
}

std::vector<NodeSet> cluster_leftovers(const SnapshotGraph& g, std::span<const NodeId> unassigned,
                                       std::uint64_t seed) {
  if (unassigned.empty()) return {};
  const SnapshotGraph sub = induced_subgraph(g, unassigned);
  return cluster_static(sub, seed).communities;
}

}  // namespace leadtrack
