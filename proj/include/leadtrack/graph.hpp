#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leadtrack {

/// Dense node identifier, stable across all snapshots of one network.
using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of nodes.
using NodeSet = std::vector<NodeId>;

/// Undirected edge; builders normalize to first < second.
using Edge = std::pair<NodeId, NodeId>;

using CommunityId = std::uint64_t;

/// Sorts and deduplicates in place.
NodeSet make_node_set(std::vector<NodeId> nodes);

bool set_contains(std::span<const NodeId> set, NodeId v) noexcept;
NodeSet set_intersection(std::span<const NodeId> a, std::span<const NodeId> b);
NodeSet set_difference(std::span<const NodeId> a, std::span<const NodeId> b);
NodeSet set_union(std::span<const NodeId> a, std::span<const NodeId> b);
std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept;

/// Interns external string labels to dense NodeIds in first-seen order.
class SymbolTable {
 public:
  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  const std::string& label(NodeId id) const;
  std::size_t size() const noexcept { return labels_.size(); }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.labels_ == b.labels_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
  };

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId, Hash, std::equal_to<>> ids_;
};

/// Immutable undirected simple graph for one timestep.
///
/// Nodes are kept sorted by NodeId and addressed internally by their
/// position ("local index"), so local order and NodeId order agree. Rows
/// of the adjacency are sorted, which lets most set algebra run as merges.
class SnapshotGraph {
 public:
  SnapshotGraph() = default;

  /// Self-loops are dropped, parallel edges collapse. `extra_nodes` adds
  /// nodes that have no incident edge in `edges`.
  static SnapshotGraph from_edges(int timestep, std::vector<Edge> edges, std::span<const NodeId> extra_nodes = {});

  int timestep() const noexcept { return timestep_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return nodes_.empty(); }

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  bool contains(NodeId v) const noexcept { return index_of(v).has_value(); }
  std::optional<std::size_t> index_of(NodeId v) const noexcept;
  /// Like index_of but throws LookupError for unknown nodes.
  std::size_t require_index(NodeId v) const;
  NodeId node_at(std::size_t index) const noexcept { return nodes_[index]; }

  std::span<const NodeId> neighbors(NodeId v) const { return neighbors_at(require_index(v)); }
  std::span<const NodeId> neighbors_at(std::size_t index) const noexcept {
    return {adjacency_.data() + offsets_[index], adjacency_.data() + offsets_[index + 1]};
  }
  std::span<const std::uint32_t> neighbor_indices_at(std::size_t index) const noexcept {
    return {adjacency_index_.data() + offsets_[index], adjacency_index_.data() + offsets_[index + 1]};
  }
  std::size_t degree_at(std::size_t index) const noexcept { return offsets_[index + 1] - offsets_[index]; }

  bool has_edge(NodeId u, NodeId v) const;
  /// All edges with first < second, sorted.
  std::vector<Edge> edges() const;

  SnapshotGraph with_timestep(int timestep) const;

  friend SnapshotGraph induced_subgraph(const SnapshotGraph& g, std::span<const NodeId> nodes);

  friend bool operator==(const SnapshotGraph& a, const SnapshotGraph& b) {
    return a.timestep_ == b.timestep_ && a.nodes_ == b.nodes_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void build_local_index();

  int timestep_ = 1;
  std::vector<NodeId> nodes_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint32_t> adjacency_index_;
  std::vector<std::uint32_t> local_index_;  // empty: fall back to binary search
  std::size_t edge_count_ = 0;

  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
};

/// Throws LookupError if v is not in g.
std::size_t degree(const SnapshotGraph& g, NodeId v);

/// |N(v) ∩ members|. `members` must be sorted and contain v.
std::size_t in_community_degree(const SnapshotGraph& g, NodeId v, std::span<const NodeId> members);

/// Subgraph induced by `nodes` (sorted, each in g). Keeps g's timestep.
SnapshotGraph induced_subgraph(const SnapshotGraph& g, std::span<const NodeId> nodes);

/// Subgraph induced by {v} ∪ N(v).
SnapshotGraph ego_network(const SnapshotGraph& g, NodeId v);

/// Ordered snapshots G^1..G^Δ sharing one symbol table.
struct DynamicNetwork {
  SymbolTable symbols;
  std::vector<SnapshotGraph> snapshots;

  std::size_t length() const noexcept { return snapshots.size(); }
  /// 1-based access.
  const SnapshotGraph& at(int t) const;

  friend bool operator==(const DynamicNetwork&, const DynamicNetwork&) = default;
};

struct TemporalEdgeRecord {
  std::string src;
  std::string dst;
  std::int64_t timestamp = 0;
};

struct IngestStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_collapsed = 0;
};

/// Slices a timestamped edge stream into fixed-width, half-open windows
/// aligned to the earliest timestamp. Window k (1-based) covers
/// [min + (k-1)·window, min + k·window). Empty windows in the middle of the
/// span are kept as empty snapshots so timesteps stay aligned.
DynamicNetwork ingest_edge_stream(std::span<const TemporalEdgeRecord> records, std::int64_t window,
                                  IngestStats* stats = nullptr);

}  // namespace leadtrack
