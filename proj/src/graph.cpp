#include "leadtrack/graph.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <map>

#include "leadtrack/errors.hpp"

namespace leadtrack {

NodeSet make_node_set(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

bool set_contains(std::span<const NodeId> set, NodeId v) noexcept {
  return std::binary_search(set.begin(), set.end(), v);
}

NodeSet set_intersection(std::span<const NodeId> a, std::span<const NodeId> b) {
  NodeSet out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_difference(std::span<const NodeId> a, std::span<const NodeId> b) {
  NodeSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_union(std::span<const NodeId> a, std::span<const NodeId> b) {
  NodeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept {
  // Galloping would help for very skewed sizes; rows here are short.
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

NodeId SymbolTable::intern(std::string_view label) {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  if (labels_.size() >= std::numeric_limits<NodeId>::max()) throw std::length_error("symbol table full");
  const auto id = static_cast<NodeId>(labels_.size());
  labels_.emplace_back(label);
  ids_.emplace(labels_.back(), id);
  return id;
}

std::optional<NodeId> SymbolTable::find(std::string_view label) const {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& SymbolTable::label(NodeId id) const {
  if (id >= labels_.size()) throw LookupError("unknown node id " + std::to_string(id));
  return labels_[id];
}

SnapshotGraph SnapshotGraph::from_edges(int timestep, std::vector<Edge> edges, std::span<const NodeId> extra_nodes) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  SnapshotGraph g;
  g.timestep_ = timestep;
  g.nodes_.reserve(edges.size() * 2 + extra_nodes.size());
  for (const auto& [u, v] : edges) {
    g.nodes_.push_back(u);
    g.nodes_.push_back(v);
  }
  g.nodes_.insert(g.nodes_.end(), extra_nodes.begin(), extra_nodes.end());
  g.nodes_ = make_node_set(std::move(g.nodes_));

  const std::size_t n = g.nodes_.size();
  g.build_local_index();
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> local;
  local.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    const auto iu = static_cast<std::uint32_t>(*g.index_of(u));
    const auto iv = static_cast<std::uint32_t>(*g.index_of(v));
    local.emplace_back(iu, iv);
    ++degree[iu];
    ++degree[iv];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adjacency_index_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [iu, iv] : local) {
    g.adjacency_index_[cursor[iu]++] = iv;
    g.adjacency_index_[cursor[iv]++] = iu;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_index_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_index_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  g.adjacency_.resize(g.adjacency_index_.size());
  for (std::size_t k = 0; k < g.adjacency_index_.size(); ++k) g.adjacency_[k] = g.nodes_[g.adjacency_index_[k]];
  g.edge_count_ = edges.size();
  return g;
}

// Dense NodeId -> local index table, unless the ids are too sparse for it.
void SnapshotGraph::build_local_index() {
  const std::size_t n = nodes_.size();
  local_index_.clear();
  if (n == 0 || nodes_.back() >= 8 * n + 64) return;
  local_index_.assign(static_cast<std::size_t>(nodes_.back()) + 1, kAbsent);
  for (std::size_t i = 0; i < n; ++i) local_index_[nodes_[i]] = static_cast<std::uint32_t>(i);
}

std::optional<std::size_t> SnapshotGraph::index_of(NodeId v) const noexcept {
  if (!local_index_.empty()) {
    if (v >= local_index_.size() || local_index_[v] == kAbsent) return std::nullopt;
    return local_index_[v];
  }
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t SnapshotGraph::require_index(NodeId v) const {
  if (auto idx = index_of(v)) return *idx;
  throw LookupError("node " + std::to_string(v) + " not in snapshot " + std::to_string(timestep_));
}

bool SnapshotGraph::has_edge(NodeId u, NodeId v) const {
  const auto iu = index_of(u);
  if (!iu) return false;
  return set_contains(neighbors_at(*iu), v);
}

std::vector<Edge> SnapshotGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (NodeId w : neighbors_at(i)) {
      if (nodes_[i] < w) out.emplace_back(nodes_[i], w);
    }
  }
  return out;
}

SnapshotGraph SnapshotGraph::with_timestep(int timestep) const {
  SnapshotGraph copy = *this;
  copy.timestep_ = timestep;
  return copy;
}

std::size_t degree(const SnapshotGraph& g, NodeId v) { return g.degree_at(g.require_index(v)); }

std::size_t in_community_degree(const SnapshotGraph& g, NodeId v, std::span<const NodeId> members) {
  const auto idx = g.require_index(v);
  if (!set_contains(members, v)) throw ContractError("in_community_degree: node is not a member");
  return intersection_size(g.neighbors_at(idx), members);
}

SnapshotGraph induced_subgraph(const SnapshotGraph& g, std::span<const NodeId> nodes) {
  // Local order is NodeId order in both graphs, so rows stay sorted when
  // filtered and translated.
  std::vector<std::uint32_t> sub_index(g.node_count(), SnapshotGraph::kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && nodes[i] <= nodes[i - 1]) throw ContractError("induced_subgraph: nodes must be sorted and unique");
    sub_index[g.require_index(nodes[i])] = static_cast<std::uint32_t>(i);
  }
  SnapshotGraph sub;
  sub.timestep_ = g.timestep_;
  sub.nodes_.assign(nodes.begin(), nodes.end());
  sub.offsets_.assign(1, 0);
  sub.offsets_.reserve(nodes.size() + 1);
  for (NodeId v : nodes) {
    const auto idx = *g.index_of(v);
    for (auto w : g.neighbor_indices_at(idx)) {
      if (sub_index[w] == SnapshotGraph::kAbsent) continue;
      sub.adjacency_index_.push_back(sub_index[w]);
      sub.adjacency_.push_back(g.nodes_[w]);
    }
    sub.offsets_.push_back(sub.adjacency_.size());
  }
  sub.edge_count_ = sub.adjacency_.size() / 2;
  sub.build_local_index();
  return sub;
}

SnapshotGraph ego_network(const SnapshotGraph& g, NodeId v) {
  const auto neighbors = g.neighbors(v);
  NodeSet ego(neighbors.begin(), neighbors.end());
  ego.insert(std::lower_bound(ego.begin(), ego.end(), v), v);
  return induced_subgraph(g, ego);
}

const SnapshotGraph& DynamicNetwork::at(int t) const {
  if (t < 1 || static_cast<std::size_t>(t) > snapshots.size()) {
    throw LookupError("timestep " + std::to_string(t) + " outside 1.." + std::to_string(snapshots.size()));
  }
  return snapshots[static_cast<std::size_t>(t - 1)];
}

DynamicNetwork ingest_edge_stream(std::span<const TemporalEdgeRecord> records, std::int64_t window,
                                  IngestStats* stats) {
  if (window <= 0) throw ContractError("ingest_edge_stream: window must be positive");
  if (records.empty()) throw EmptyNetworkError("edge stream has no records");

  IngestStats local_stats;
  DynamicNetwork net;
  const auto start = std::min_element(records.begin(), records.end(), [](const auto& a, const auto& b) {
                       return a.timestamp < b.timestamp;
                     })->timestamp;

  std::map<std::int64_t, std::vector<Edge>> windows;
  for (const auto& rec : records) {
    const NodeId u = net.symbols.intern(rec.src);
    const NodeId v = net.symbols.intern(rec.dst);
    const std::int64_t k = (rec.timestamp - start) / window;
    if (u == v) {
      ++local_stats.self_loops_dropped;
      continue;
    }
    windows[k].emplace_back(std::min(u, v), std::max(u, v));
  }
  if (windows.empty()) throw EmptyNetworkError("edge stream contains only self-loops");

  // Trailing windows that only held self-loops carry no nodes; drop them.
  const std::int64_t last_window = windows.rbegin()->first;
  net.snapshots.reserve(static_cast<std::size_t>(last_window + 1));
  for (std::int64_t k = 0; k <= last_window; ++k) {
    auto it = windows.find(k);
    std::vector<Edge> edges = it == windows.end() ? std::vector<Edge>{} : std::move(it->second);
    const std::size_t raw = edges.size();
    auto snapshot = SnapshotGraph::from_edges(static_cast<int>(k + 1), std::move(edges));
    local_stats.duplicate_edges_collapsed += raw - snapshot.edge_count();
    net.snapshots.push_back(std::move(snapshot));
  }
  if (stats) *stats = local_stats;
  return net;
}

}  // namespace leadtrack
