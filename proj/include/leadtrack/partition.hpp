#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "leadtrack/graph.hpp"
#include "leadtrack/labeled_partition.hpp"
#include "leadtrack/leaders.hpp"

namespace leadtrack {

struct Community {
  CommunityId id = 0;
  NodeSet members;
  LeaderSet leaders;

  friend bool operator==(const Community&, const Community&) = default;
};

/// Disjoint communities covering the nodes of snapshot t, in ascending id
/// order.
struct Partition {
  int t = 1;
  std::vector<Community> communities;

  const Community* find(CommunityId id) const;
  /// Union of all members, sorted.
  NodeSet nodes() const;
  LabeledPartition labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class EventKind { Born, Dissolved };

std::string_view to_string(EventKind kind);

struct LifecycleEvent {
  int t = 1;
  CommunityId id = 0;
  EventKind kind = EventKind::Born;

  friend bool operator==(const LifecycleEvent&, const LifecycleEvent&) = default;
};

struct TimelineEntry {
  int t = 1;
  NodeSet members;
  NodeSet leaders;

  friend bool operator==(const TimelineEntry&, const TimelineEntry&) = default;
};

struct CommunityTimeline {
  CommunityId id = 0;
  int birth_t = 1;
  std::optional<int> death_t;
  std::vector<TimelineEntry> steps;

  friend bool operator==(const CommunityTimeline&, const CommunityTimeline&) = default;
};

/// Rebuilds per-community lifecycles from partitions and events, ordered
/// by id.
std::vector<CommunityTimeline> build_timelines(std::span<const Partition> partitions,
                                               std::span<const LifecycleEvent> events);

/// Throws ContractError unless p's communities are non-empty, pairwise
/// disjoint, exactly cover g's nodes, and each leader set is a non-empty
/// clique inside its community that contains the anchor.
void check_partition(const SnapshotGraph& g, const Partition& p);

}  // namespace leadtrack
