#include "leadtrack/leaders.hpp"

#include <algorithm>
#include <vector>

#include "leadtrack/errors.hpp"

namespace leadtrack {

LeaderSet detect_leaders(const SnapshotGraph& g, std::span<const NodeId> members) {
  if (members.empty()) throw ContractError("detect_leaders: empty member set");
  if (!std::is_sorted(members.begin(), members.end())) throw ContractError("detect_leaders: members must be sorted");

  thread_local std::vector<char> is_member;
  is_member.assign(g.node_count(), 0);
  std::vector<std::size_t> member_idx;
  member_idx.reserve(members.size());
  for (NodeId v : members) {
    const auto idx = g.index_of(v);
    if (!idx) throw ContractError("detect_leaders: member " + std::to_string(v) + " not in snapshot");
    member_idx.push_back(*idx);
    is_member[*idx] = 1;
  }

  NodeId anchor = members.front();
  std::size_t best = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    std::size_t in_degree = 0;
    for (auto w : g.neighbor_indices_at(member_idx[k])) in_degree += is_member[w];
    if (k == 0 || in_degree > best) {
      anchor = members[k];
      best = in_degree;
    }
  }

  // Every maximal clique containing the anchor is the anchor plus a maximal
  // clique of its in-community neighbourhood H. A node of H lies in all of
  // them exactly when it is adjacent to every other node of H.
  const NodeSet hood = set_intersection(g.neighbors(anchor), members);
  LeaderSet result{anchor, {anchor}};
  for (NodeId u : hood) {
    if (intersection_size(g.neighbors(u), hood) + 1 == hood.size()) result.leaders.push_back(u);
  }
  std::sort(result.leaders.begin(), result.leaders.end());
  return result;
}

}  // namespace leadtrack
