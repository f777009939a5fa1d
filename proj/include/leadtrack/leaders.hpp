#pragma once

#include <span>

#include "leadtrack/graph.hpp"

namespace leadtrack {

/// Leaders of one community: the nodes shared by every maximal clique that
/// contains the anchor, where the anchor is the member with the highest
/// in-community degree.
struct LeaderSet {
  NodeId anchor = 0;
  NodeSet leaders;

  friend bool operator==(const LeaderSet&, const LeaderSet&) = default;
};

/// Cliques are taken on the anchor's ego network inside the subgraph
/// induced by `members`, so leaders never leave the community. Anchor ties
/// go to the smallest NodeId. The intersection is computed directly as the
/// anchor plus those in-community neighbours adjacent to all the others,
/// which equals the clique intersection without enumerating cliques.
///
/// `members` must be sorted, non-empty and contained in g; ContractError
/// otherwise.
LeaderSet detect_leaders(const SnapshotGraph& g, std::span<const NodeId> members);

}  // namespace leadtrack
