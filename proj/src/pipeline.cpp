#include "leadtrack/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "leadtrack/errors.hpp"
#include "leadtrack/leaders.hpp"
#include "leadtrack/static_cluster.hpp"

namespace leadtrack {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Community annotate(const SnapshotGraph& g, CommunityId id, NodeSet members) {
  Community c{id, std::move(members), {}};
  c.leaders = detect_leaders(g, c.members);
  return c;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DynamicDetector::DynamicDetector(DetectorOptions options) : options_(std::move(options)) {
  if (options_.threads == 0) options_.threads = std::max(1u, std::thread::hardware_concurrency());
}

StepResult DynamicDetector::bootstrap(const SnapshotGraph& first, std::uint64_t seed) {
  StepResult out;
  out.partition.t = first.timestep();
  for (auto& members : cluster_static(first, seed).communities) {
    const CommunityId id = next_id_++;
    out.partition.communities.push_back(annotate(first, id, std::move(members)));
    out.events.push_back({first.timestep(), id, EventKind::Born});
  }
  if (options_.check_invariants) check_partition(first, out.partition);
  return out;
}

std::vector<CommunityState> DynamicDetector::expand_all(const SnapshotGraph& g, const std::vector<NodeSet>& seeds,
                                                        std::vector<ExpansionTrace>* traces) const {
  std::vector<CommunityState> results(seeds.size());
  if (traces) traces->assign(seeds.size(), {});
  auto work = [&](std::size_t i) { results[i] = expand(g, seeds[i], traces ? &(*traces)[i] : nullptr); };

  const std::size_t workers = std::min<std::size_t>(options_.threads, seeds.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) work(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

StepResult DynamicDetector::step(const SnapshotGraph& g, const Partition& prev, std::uint64_t seed) {
  const int t = g.timestep();
  if (prev.t != t - 1) {
    throw ContractError("step: previous partition is for t=" + std::to_string(prev.t) + ", snapshot is t=" +
                        std::to_string(t));
  }
  StepResult out;
  out.partition.t = t;

  // (1) Surviving leaders seed the expansion.
  std::vector<CommunityId> ids;
  std::vector<NodeSet> seeds;
  for (const auto& c : prev.communities) {
    NodeSet seed_nodes;
    for (NodeId v : c.leaders.leaders) {
      if (g.contains(v)) seed_nodes.push_back(v);
    }
    if (seed_nodes.empty()) {
      out.events.push_back({t, c.id, EventKind::Dissolved});
      continue;
    }
    ids.push_back(c.id);
    seeds.push_back(std::move(seed_nodes));
  }

  // (2) Independent expansions.
  std::vector<ExpansionTrace> traces;
  auto states = expand_all(g, seeds, options_.on_expansion ? &traces : nullptr);
  if (options_.on_expansion) {
    for (std::size_t i = 0; i < ids.size(); ++i) options_.on_expansion(t, ids[i], traces[i]);
  }

  // (3) Hub resolution.
  std::vector<ClaimedCommunity> claimed;
  claimed.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) claimed.push_back({ids[i], std::move(states[i].members)});
  auto resolved = resolve_memberships(g, collect_expansions(g, std::move(claimed)));
  for (CommunityId id : resolved.emptied) out.events.push_back({t, id, EventKind::Dissolved});

  // (5) for survivors, then (4) newborns from the leftovers.
  for (auto& c : resolved.communities) out.partition.communities.push_back(annotate(g, c.id, std::move(c.members)));
  for (auto& members : cluster_leftovers(g, resolved.unassigned, seed)) {
    const CommunityId id = next_id_++;
    out.partition.communities.push_back(annotate(g, id, std::move(members)));
    out.events.push_back({t, id, EventKind::Born});
  }

  std::sort(out.events.begin(), out.events.end(), [](const LifecycleEvent& a, const LifecycleEvent& b) {
    return std::tie(a.kind, a.id) < std::tie(b.kind, b.id);
  });
  if (options_.check_invariants) check_partition(g, out.partition);
  return out;
}

RunResult run(const DynamicNetwork& net, const DetectorOptions& options) {
  if (net.snapshots.empty()) throw ContractError("run: network has no snapshots");
  RunResult result;
  DynamicDetector detector(options);

  auto start = Clock::now();
  auto first = detector.bootstrap(net.snapshots.front(), derive_seed(options.seed, 1));
  result.step_seconds.push_back(seconds_since(start));
  result.partitions.push_back(std::move(first.partition));
  result.events = std::move(first.events);

  for (std::size_t k = 1; k < net.snapshots.size(); ++k) {
    const auto& g = net.snapshots[k];
    start = Clock::now();
    auto next = detector.step(g, result.partitions.back(), derive_seed(options.seed, static_cast<std::uint64_t>(k + 1)));
    result.step_seconds.push_back(seconds_since(start));
    result.partitions.push_back(std::move(next.partition));
    result.events.insert(result.events.end(), next.events.begin(), next.events.end());
  }
  result.timelines = build_timelines(result.partitions, result.events);
  return result;
}

std::vector<Partition> run_static_baseline(const DynamicNetwork& net, std::uint64_t seed,
                                           std::vector<double>* step_seconds) {
  std::vector<Partition> out;
  if (step_seconds) step_seconds->clear();
  CommunityId next_id = 1;
  for (std::size_t k = 0; k < net.snapshots.size(); ++k) {
    const auto& g = net.snapshots[k];
    const auto start = Clock::now();
    auto clustering = cluster_static(g, derive_seed(seed, static_cast<std::uint64_t>(k + 1)));
    if (step_seconds) step_seconds->push_back(seconds_since(start));
    Partition p;
    p.t = g.timestep();
    for (auto& members : clustering.communities) p.communities.push_back(annotate(g, next_id++, std::move(members)));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace leadtrack
