#include "leadtrack/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "leadtrack/errors.hpp"

namespace leadtrack {
namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

// Per-thread scratch arrays indexed by local node index. An epoch counter
// makes clearing O(1) between calls.
struct Scratch {
  std::vector<std::uint32_t> epoch_of;
  std::vector<std::uint32_t> in_degree;
  std::vector<std::uint32_t> frontier_pos;  // kNone for members
  std::uint32_t epoch = 0;

  void prepare(std::size_t n) {
    if (epoch_of.size() < n) {
      epoch_of.resize(n, 0);
      in_degree.resize(n, 0);
      frontier_pos.resize(n, kNone);
    }
    if (++epoch == 0) {
      std::fill(epoch_of.begin(), epoch_of.end(), 0);
      epoch = 1;
    }
  }
  bool seen(std::size_t i) const { return epoch_of[i] == epoch; }
  void touch(std::size_t i) {
    epoch_of[i] = epoch;
    in_degree[i] = 0;
    frontier_pos[i] = kNone;
  }
};

double ic_or_zero(std::int64_t eta, std::int64_t mu) { return eta + mu == 0 ? 0.0 : index_of_connectivity(eta, mu); }

// IC as the exact pair (eta - mu, eta + mu), ordered without rounding:
// compare signs, then squared numerators against the other denominator.
// An edgeless community compares as IC = 0.
struct ExactIc {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Monotone in IC; equal keys are settled by compare().
  double key() const { return static_cast<double>(num) * static_cast<double>(num < 0 ? -num : num) / static_cast<double>(den); }

  static ExactIc of(std::int64_t eta, std::int64_t mu) { return eta + mu == 0 ? ExactIc{} : ExactIc{eta - mu, eta + mu}; }
};

__extension__ using Wide = __int128;

int compare(const ExactIc& a, const ExactIc& b) {
  const int sa = (a.num > 0) - (a.num < 0);
  const int sb = (b.num > 0) - (b.num < 0);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Magnitudes compared as num^2 / den; fits in 128 bits.
  const auto lhs = static_cast<Wide>(a.num) * a.num * b.den;
  const auto rhs = static_cast<Wide>(b.num) * b.num * a.den;
  if (lhs == rhs) return 0;
  return ((lhs > rhs) == (sa > 0)) ? 1 : -1;
}

}  // namespace

double index_of_connectivity(std::int64_t eta, std::int64_t mu) {
  if (eta < 0 || mu < 0) throw ContractError("index_of_connectivity: negative edge count");
  if (eta + mu == 0) throw UndefinedValueError("index_of_connectivity: community has no incident edges");
  return static_cast<double>(eta - mu) / std::sqrt(static_cast<double>(eta + mu));
}

IcUpdate incremental_ic(const CommunityState& s, NodeId u, std::int64_t d_u, std::int64_t in_u) {
  if (in_u < 0 || d_u < 0 || in_u > d_u) throw ContractError("incremental_ic: need 0 <= in_u <= d_u");
  if (set_contains(s.members, u)) throw ContractError("incremental_ic: node already a member");
  IcUpdate out;
  out.eta = s.eta + in_u;
  out.mu = s.mu + d_u - 2 * in_u;
  out.ic = index_of_connectivity(out.eta, out.mu);
  return out;
}

CommunityState count_community(const SnapshotGraph& g, std::span<const NodeId> members) {
  CommunityState s;
  s.members.assign(members.begin(), members.end());
  std::int64_t twice_eta = 0;
  for (NodeId v : members) {
    const auto idx = g.require_index(v);
    const auto in = static_cast<std::int64_t>(intersection_size(g.neighbors_at(idx), members));
    twice_eta += in;
    s.mu += static_cast<std::int64_t>(g.degree_at(idx)) - in;
  }
  s.eta = twice_eta / 2;
  return s;
}

CommunityState expand(const SnapshotGraph& g, std::span<const NodeId> seed, ExpansionTrace* trace) {
  if (seed.empty()) throw ContractError("expand: empty seed");
  NodeSet members = make_node_set({seed.begin(), seed.end()});
  for (NodeId v : members) {
    if (!g.contains(v)) throw ContractError("expand: seed node " + std::to_string(v) + " not in snapshot");
  }

  CommunityState state = count_community(g, members);
  double current = ic_or_zero(state.eta, state.mu);
  if (trace) {
    trace->seed = members;
    trace->initial_eta = state.eta;
    trace->initial_mu = state.mu;
    trace->initial_ic = current;
    trace->steps.clear();
  }

  thread_local Scratch scratch;
  scratch.prepare(g.node_count());
  std::vector<std::uint32_t> frontier;

  auto admit_neighbours = [&](std::size_t idx) {
    for (auto w : g.neighbor_indices_at(idx)) {
      if (!scratch.seen(w)) {
        scratch.touch(w);
        scratch.frontier_pos[w] = static_cast<std::uint32_t>(frontier.size());
        frontier.push_back(w);
      }
      if (scratch.frontier_pos[w] != kNone) ++scratch.in_degree[w];
    }
  };

  std::vector<std::size_t> member_idx;
  member_idx.reserve(members.size());
  for (NodeId v : members) {
    const auto idx = *g.index_of(v);
    member_idx.push_back(idx);
    scratch.touch(idx);  // frontier_pos stays kNone: a member
  }
  for (auto idx : member_idx) admit_neighbours(idx);

  ExactIc current_exact = ExactIc::of(state.eta, state.mu);
  while (!frontier.empty()) {
    std::uint32_t best = kNone;
    ExactIc best_score;
    double best_key = 0.0;
    std::int64_t best_in = 0;
    for (auto w : frontier) {
      const auto in = static_cast<std::int64_t>(scratch.in_degree[w]);
      const auto d = static_cast<std::int64_t>(g.degree_at(w));
      const ExactIc score{(state.eta + in) - (state.mu + d - 2 * in), state.eta + state.mu + d - in};
      const double key = score.key();
      if (best != kNone && key < best_key) continue;
      int order = best == kNone || key > best_key ? 1 : compare(score, best_score);
      if (order == 0) order = in != best_in ? (in > best_in ? 1 : -1) : (w < best ? 1 : -1);
      if (order > 0) {
        best = w;
        best_score = score;
        best_key = key;
        best_in = in;
      }
    }
    if (compare(best_score, current_exact) <= 0) break;

    const auto pos = scratch.frontier_pos[best];
    frontier[pos] = frontier.back();
    scratch.frontier_pos[frontier[pos]] = pos;
    frontier.pop_back();
    scratch.frontier_pos[best] = kNone;

    const NodeId node = g.node_at(best);
    members.insert(std::lower_bound(members.begin(), members.end(), node), node);
    state.eta += best_in;
    state.mu += static_cast<std::int64_t>(g.degree_at(best)) - 2 * best_in;
    current_exact = best_score;
    current = index_of_connectivity(state.eta, state.mu);
    if (trace) {
      trace->steps.push_back({node, static_cast<std::int64_t>(g.degree_at(best)), best_in, state.eta, state.mu,
                              current});
    }
    admit_neighbours(best);
  }

  state.members = std::move(members);
  return state;
}

double hub_similarity(const SnapshotGraph& g, NodeId u, std::span<const NodeId> members) {
  const auto neighbours = g.neighbors(u);
  const bool u_in_members = set_contains(members, u);
  const std::size_t member_count = members.size() - (u_in_members ? 1 : 0);
  // u is never its own neighbour, so excluding it changes only |M|.
  const std::size_t shared = intersection_size(neighbours, members);
  const std::size_t joint = neighbours.size() + member_count - shared;
  if (joint == 0) return 0.0;
  return static_cast<double>(shared) / static_cast<double>(joint);
}

ExpansionResult collect_expansions(const SnapshotGraph& g, std::vector<ClaimedCommunity> communities) {
  ExpansionResult result;
  std::vector<char> claimed(g.node_count(), 0);
  for (const auto& c : communities) {
    for (NodeId v : c.members) claimed[g.require_index(v)] = 1;
  }
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!claimed[i]) result.unassigned.push_back(g.node_at(i));
  }
  result.communities = std::move(communities);
  return result;
}

ResolvedMemberships resolve_memberships(const SnapshotGraph& g, const ExpansionResult& result) {
  const auto& comms = result.communities;

  // (node, community index) claims sorted by node group the hubs together.
  std::vector<std::pair<NodeId, std::size_t>> claims;
  for (std::size_t c = 0; c < comms.size(); ++c) {
    for (NodeId v : comms[c].members) claims.emplace_back(v, c);
  }
  std::sort(claims.begin(), claims.end());

  std::vector<std::vector<NodeId>> evicted(comms.size());
  for (std::size_t lo = 0; lo < claims.size();) {
    std::size_t hi = lo + 1;
    while (hi < claims.size() && claims[hi].first == claims[lo].first) ++hi;
    if (hi - lo > 1) {
      const NodeId hub = claims[lo].first;
      std::size_t keep = claims[lo].second;
      double keep_j = -1.0;
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t c = claims[k].second;
        const double j = hub_similarity(g, hub, comms[c].members);
        const bool better = j > keep_j ||
                            (j == keep_j && (comms[c].members.size() > comms[keep].members.size() ||
                                             (comms[c].members.size() == comms[keep].members.size() &&
                                              comms[c].id < comms[keep].id)));
        if (better) {
          keep = c;
          keep_j = j;
        }
      }
      for (std::size_t k = lo; k < hi; ++k) {
        if (claims[k].second != keep) evicted[claims[k].second].push_back(hub);
      }
    }
    lo = hi;
  }

  ResolvedMemberships out;
  for (std::size_t c = 0; c < comms.size(); ++c) {
    NodeSet kept = evicted[c].empty() ? comms[c].members : set_difference(comms[c].members, evicted[c]);
    if (kept.empty()) {
      out.emptied.push_back(comms[c].id);
    } else {
      out.communities.push_back({comms[c].id, std::move(kept)});
    }
  }
  std::vector<char> assigned(g.node_count(), 0);
  for (const auto& c : out.communities) {
    for (NodeId v : c.members) assigned[g.require_index(v)] = 1;
  }
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!assigned[i]) out.unassigned.push_back(g.node_at(i));
  }
  return out;
}

}  // namespace leadtrack
