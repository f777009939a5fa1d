#include "leadtrack/partition.hpp"

#include <algorithm>
#include <map>

#include "leadtrack/errors.hpp"

namespace leadtrack {

LabeledPartition::LabeledPartition(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first) {
      throw ContractError("LabeledPartition: node " + std::to_string(entries_[i].first) + " labelled twice");
    }
  }
}

LabeledPartition LabeledPartition::from_communities(std::span<const NodeSet> communities) {
  std::vector<Entry> entries;
  for (std::size_t c = 0; c < communities.size(); ++c) {
    for (NodeId v : communities[c]) entries.emplace_back(v, static_cast<Label>(c));
  }
  return LabeledPartition(std::move(entries));
}

std::optional<Label> LabeledPartition::label_of(NodeId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, NodeId x) { return e.first < x; });
  if (it == entries_.end() || it->first != v) return std::nullopt;
  return it->second;
}

NodeSet LabeledPartition::nodes() const {
  NodeSet out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

LabeledPartition LabeledPartition::restricted_to(std::span<const NodeId> universe) const {
  LabeledPartition out;
  for (const auto& e : entries_) {
    if (set_contains(universe, e.first)) out.entries_.push_back(e);
  }
  return out;
}

const Community* Partition::find(CommunityId id) const {
  auto it = std::lower_bound(communities.begin(), communities.end(), id,
                             [](const Community& c, CommunityId x) { return c.id < x; });
  if (it == communities.end() || it->id != id) return nullptr;
  return &*it;
}

NodeSet Partition::nodes() const {
  NodeSet out;
  for (const auto& c : communities) out.insert(out.end(), c.members.begin(), c.members.end());
  return make_node_set(std::move(out));
}

LabeledPartition Partition::labels() const {
  std::vector<LabeledPartition::Entry> entries;
  for (const auto& c : communities) {
    for (NodeId v : c.members) entries.emplace_back(v, static_cast<Label>(c.id));
  }
  return LabeledPartition(std::move(entries));
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Born:
      return "BORN";
    case EventKind::Dissolved:
      return "DISSOLVED";
  }
  return "?";
}

std::vector<CommunityTimeline> build_timelines(std::span<const Partition> partitions,
                                               std::span<const LifecycleEvent> events) {
  std::map<CommunityId, CommunityTimeline> by_id;
  for (const auto& e : events) {
    auto& tl = by_id[e.id];
    tl.id = e.id;
    if (e.kind == EventKind::Born) {
      tl.birth_t = e.t;
    } else {
      tl.death_t = e.t;
    }
  }
  for (const auto& p : partitions) {
    for (const auto& c : p.communities) {
      auto [it, inserted] = by_id.try_emplace(c.id);
      auto& tl = it->second;
      if (inserted) {
        tl.id = c.id;
        tl.birth_t = p.t;
      }
      tl.steps.push_back({p.t, c.members, c.leaders.leaders});
    }
  }
  std::vector<CommunityTimeline> out;
  out.reserve(by_id.size());
  for (auto& [id, tl] : by_id) out.push_back(std::move(tl));
  return out;
}

void check_partition(const SnapshotGraph& g, const Partition& p) {
  if (p.t != g.timestep()) throw ContractError("partition timestep does not match snapshot");
  std::vector<char> seen(g.node_count(), 0);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < p.communities.size(); ++i) {
    const auto& c = p.communities[i];
    if (i > 0 && p.communities[i - 1].id >= c.id) throw ContractError("community ids not strictly ascending");
    if (c.members.empty()) throw ContractError("empty community " + std::to_string(c.id));
    if (!std::is_sorted(c.members.begin(), c.members.end())) throw ContractError("unsorted members");
    for (NodeId v : c.members) {
      const auto idx = g.index_of(v);
      if (!idx) throw ContractError("community member missing from snapshot");
      if (seen[*idx]) throw ContractError("node " + std::to_string(v) + " in two communities");
      seen[*idx] = 1;
      ++covered;
    }
    const auto& leaders = c.leaders.leaders;
    if (leaders.empty()) throw ContractError("community " + std::to_string(c.id) + " has no leaders");
    if (!set_contains(leaders, c.leaders.anchor)) throw ContractError("anchor not among leaders");
    for (std::size_t a = 0; a < leaders.size(); ++a) {
      if (!set_contains(c.members, leaders[a])) throw ContractError("leader outside its community");
      for (std::size_t b = a + 1; b < leaders.size(); ++b) {
        if (!g.has_edge(leaders[a], leaders[b])) throw ContractError("leaders do not form a clique");
      }
    }
  }
  if (covered != g.node_count()) throw ContractError("partition does not cover the snapshot");
}

}  // namespace leadtrack
