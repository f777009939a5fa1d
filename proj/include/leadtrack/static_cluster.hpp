#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "leadtrack/graph.hpp"

namespace leadtrack {

struct StaticPartition {
  /// Disjoint cover of the input nodes. Each set is sorted; sets are
  /// ordered by their smallest member.
  std::vector<NodeSet> communities;
  /// Modularity of `communities`, recounted from the definition (0 for an
  /// edgeless graph).
  double modularity = 0.0;
  /// Modularity after each completed level (node-moving pass plus
  /// aggregation). Non-decreasing.
  std::vector<double> level_modularity;
};

/// Newman modularity Q = sum_c [ e_c/m - (d_c/2m)^2 ].
/// ContractError if `partition` is not a disjoint cover of g's nodes;
/// UndefinedValueError if g has no edges.
double modularity(const SnapshotGraph& g, std::span<const NodeSet> partition);

/// Louvain-style greedy modularity maximization (local moving followed by
/// community aggregation, repeated until no node moves). Node visiting
/// order is shuffled with `seed`.
StaticPartition cluster_static(const SnapshotGraph& g, std::uint64_t seed = 0);

/// Clusters the subgraph induced by `unassigned` (sorted, subset of g).
/// Nodes without edges inside that subgraph come back as singletons.
std::vector<NodeSet> cluster_leftovers(const SnapshotGraph& g, std::span<const NodeId> unassigned,
                                       std::uint64_t seed = 0);

}  // namespace leadtrack
