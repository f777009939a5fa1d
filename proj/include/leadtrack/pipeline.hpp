#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "leadtrack/expansion.hpp"
#include "leadtrack/graph.hpp"
#include "leadtrack/partition.hpp"

namespace leadtrack {

/// Called after each step's expansion barrier, in community-id order.
using ExpansionObserver = std::function<void(int t, CommunityId id, const ExpansionTrace& trace)>;

struct DetectorOptions {
  std::uint64_t seed = 0;
  /// Worker threads for the expansion phase; 0 means hardware concurrency.
  /// Results do not depend on this value.
  unsigned threads = 1;
  /// Run check_partition on every produced partition.
  bool check_invariants = true;
  ExpansionObserver on_expansion;
};

struct StepResult {
  Partition partition;
  std::vector<LifecycleEvent> events;
};

/// Leader-seeded incremental community detection. Holds the id counter so
/// that ids are never reused across steps.
class DynamicDetector {
 public:
  explicit DynamicDetector(DetectorOptions options = {});

  /// Static clustering of the first snapshot; every community is BORN.
  StepResult bootstrap(const SnapshotGraph& first, std::uint64_t seed);

  /// One incremental step:
  ///  1. seed each previous community with its leaders still present in g
  ///     (none left: DISSOLVED),
  ///  2. expand every seed on g,
  ///  3. resolve nodes claimed by several communities; communities emptied
  ///     by this are DISSOLVED,
  ///  4. statically cluster the unassigned nodes into BORN communities,
  ///  5. recompute leaders everywhere.
  /// ContractError unless prev.t == g.timestep() - 1.
  StepResult step(const SnapshotGraph& g, const Partition& prev, std::uint64_t seed);

  CommunityId next_id() const noexcept { return next_id_; }

 private:
  std::vector<CommunityState> expand_all(const SnapshotGraph& g, const std::vector<NodeSet>& seeds,
                                         std::vector<ExpansionTrace>* traces) const;

  DetectorOptions options_;
  CommunityId next_id_ = 1;
};

struct RunResult {
  std::vector<Partition> partitions;
  std::vector<LifecycleEvent> events;
  std::vector<CommunityTimeline> timelines;
  /// Wall-clock seconds per snapshot (index t-1).
  std::vector<double> step_seconds;
};

/// Bootstrap on G^1, then one step per later snapshot.
RunResult run(const DynamicNetwork& net, const DetectorOptions& options = {});

/// Independent static clustering of every snapshot with fresh ids each
/// step. `step_seconds` receives the clustering time only (leader
/// annotation is not timed).
std::vector<Partition> run_static_baseline(const DynamicNetwork& net, std::uint64_t seed,
                                           std::vector<double>* step_seconds = nullptr);

/// Per-timestep seed derived from the run seed (SplitMix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace leadtrack
