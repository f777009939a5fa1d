#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "leadtrack/graph.hpp"

namespace leadtrack {

/// A community together with its internal edge count (eta) and boundary
/// edge count (mu).
struct CommunityState {
  NodeSet members;
  std::int64_t eta = 0;
  std::int64_t mu = 0;

  friend bool operator==(const CommunityState&, const CommunityState&) = default;
};

/// Index of connectivity (eta - mu) / sqrt(eta + mu). Throws
/// UndefinedValueError when eta + mu == 0.
double index_of_connectivity(std::int64_t eta, std::int64_t mu);
inline double index_of_connectivity(const CommunityState& s) { return index_of_connectivity(s.eta, s.mu); }

struct IcUpdate {
  std::int64_t eta = 0;
  std::int64_t mu = 0;
  double ic = 0.0;
};

/// Scores after adding u (degree d_u, in_u neighbours inside s.members):
///   eta' = eta + in_u,  mu' = mu + d_u - 2 in_u.
/// ContractError if in_u > d_u, either is negative, or u is already a member.
IcUpdate incremental_ic(const CommunityState& s, NodeId u, std::int64_t d_u, std::int64_t in_u);

/// Full recount of (eta, mu) for `members` (sorted, all in g).
CommunityState count_community(const SnapshotGraph& g, std::span<const NodeId> members);

struct ExpansionStep {
  NodeId added = 0;
  std::int64_t degree = 0;
  std::int64_t in_degree = 0;
  std::int64_t eta = 0;
  std::int64_t mu = 0;
  double ic = 0.0;
};

/// Record of one greedy run: the starting scores and every accepted node.
struct ExpansionTrace {
  NodeSet seed;
  std::int64_t initial_eta = 0;
  std::int64_t initial_mu = 0;
  double initial_ic = 0.0;
  std::vector<ExpansionStep> steps;
};

/// Greedy growth from `seed`. Each round scores every frontier node (a
/// non-member adjacent to the community) with incremental_ic and adds the
/// best one if it strictly raises the index of connectivity. Ties go to
/// the higher in-community degree, then to the smaller NodeId. A seed with
/// no incident edges scores 0 and is returned unchanged.
///
/// ContractError if the seed is empty or has a node missing from g.
CommunityState expand(const SnapshotGraph& g, std::span<const NodeId> seed, ExpansionTrace* trace = nullptr);

/// |N(u) ∩ M| / |N(u) ∪ M| with M = members \ {u}. Returns 0 when both sets
/// are empty.
double hub_similarity(const SnapshotGraph& g, NodeId u, std::span<const NodeId> members);

struct ClaimedCommunity {
  CommunityId id = 0;
  NodeSet members;

  friend bool operator==(const ClaimedCommunity&, const ClaimedCommunity&) = default;
};

/// Independently expanded communities, possibly overlapping, plus the nodes
/// of the snapshot that none of them claimed.
struct ExpansionResult {
  std::vector<ClaimedCommunity> communities;
  NodeSet unassigned;
};

/// Builds an ExpansionResult, deriving the unassigned set from g.
ExpansionResult collect_expansions(const SnapshotGraph& g, std::vector<ClaimedCommunity> communities);

struct ResolvedMemberships {
  std::vector<ClaimedCommunity> communities;  // pairwise disjoint, non-empty
  NodeSet unassigned;
  std::vector<CommunityId> emptied;  // dropped because hub removal left nothing
};

/// Keeps each multiply-claimed node only in the claimant with the highest
/// hub_similarity, measured against the claimants' expanded member sets.
/// Ties: larger community, then smaller id. Input order is preserved.
ResolvedMemberships resolve_memberships(const SnapshotGraph& g, const ExpansionResult& result);

}  // namespace leadtrack
