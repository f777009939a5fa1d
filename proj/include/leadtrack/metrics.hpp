#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leadtrack/graph.hpp"
#include "leadtrack/labeled_partition.hpp"
#include "leadtrack/partition.hpp"

namespace leadtrack {

/// Per-timestep ground-truth labelling (index t-1).
struct GroundTruth {
  std::vector<LabeledPartition> steps;

  const LabeledPartition& at(int t) const;
};

/// Normalized mutual information 2 I(A;B) / (H(A) + H(B)) with natural-log
/// entropies. Both partitions must label the same non-empty node set
/// (ContractError otherwise). If both are single clusters the result is 1.
double nmi(const LabeledPartition& a, const LabeledPartition& b);

struct SeriesPoint {
  int t = 1;
  std::optional<double> value;  // empty when the shared universe is empty
  std::size_t universe_size = 0;
};

/// Entry i compares partitions i and i+1 on the nodes present in both;
/// the point carries the earlier timestep.
std::vector<SeriesPoint> smoothness_series(std::span<const Partition> partitions);

/// Entry per partition: NMI against the truth of the same timestep on the
/// nodes labelled by both.
std::vector<SeriesPoint> ground_truth_series(std::span<const Partition> partitions, const GroundTruth& truth);

struct PersistencePoint {
  int t = 1;
  std::optional<double> leader;    // share of leaders at t present at t+1
  std::optional<double> follower;  // same over non-leader members
  std::size_t leader_count = 0;
  std::size_t follower_count = 0;
};

/// Presence at t+1 is taken from snapshot t+1 of `net`.
std::vector<PersistencePoint> persistence_series(const DynamicNetwork& net, std::span<const Partition> partitions);

/// Presence at t+1 is taken from the nodes covered by partition t+1.
std::vector<PersistencePoint> persistence_series(std::span<const Partition> partitions);

}  // namespace leadtrack
