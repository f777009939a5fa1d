#include "leadtrack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "leadtrack/errors.hpp"

namespace leadtrack {
namespace {

double entropy_of(const std::unordered_map<Label, std::size_t>& counts, double n) {
  double h = 0.0;
  for (const auto& [label, count] : counts) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log(p);
  }
  return h;
}

std::vector<PersistencePoint> persistence_with(std::span<const Partition> partitions,
                                               const std::vector<NodeSet>& present) {
  std::vector<PersistencePoint> out;
  for (std::size_t k = 0; k + 1 < partitions.size(); ++k) {
    const auto& next_nodes = present[k + 1];
    PersistencePoint pt;
    pt.t = partitions[k].t;
    std::size_t leaders_kept = 0;
    std::size_t followers_kept = 0;
    for (const auto& c : partitions[k].communities) {
      for (NodeId v : c.members) {
        const bool stays = set_contains(next_nodes, v);
        if (set_contains(c.leaders.leaders, v)) {
          ++pt.leader_count;
          leaders_kept += stays;
        } else {
          ++pt.follower_count;
          followers_kept += stays;
        }
      }
    }
    if (pt.leader_count > 0) pt.leader = static_cast<double>(leaders_kept) / static_cast<double>(pt.leader_count);
    if (pt.follower_count > 0) {
      pt.follower = static_cast<double>(followers_kept) / static_cast<double>(pt.follower_count);
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace

const LabeledPartition& GroundTruth::at(int t) const {
  if (t < 1 || static_cast<std::size_t>(t) > steps.size()) {
    throw LookupError("no ground truth for timestep " + std::to_string(t));
  }
  return steps[static_cast<std::size_t>(t - 1)];
}

double nmi(const LabeledPartition& a, const LabeledPartition& b) {
  if (a.empty()) throw ContractError("nmi: empty node universe");
  if (a.size() != b.size()) throw ContractError("nmi: partitions cover different node sets");
  const auto ea = a.entries();
  const auto eb = b.entries();

  std::unordered_map<Label, std::size_t> count_a, count_b;
  std::map<std::pair<Label, Label>, std::size_t> joint;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].first != eb[i].first) throw ContractError("nmi: partitions cover different node sets");
    ++count_a[ea[i].second];
    ++count_b[eb[i].second];
    ++joint[{ea[i].second, eb[i].second}];
  }

  const double n = static_cast<double>(ea.size());
  const double ha = entropy_of(count_a, n);
  const double hb = entropy_of(count_b, n);
  if (ha + hb == 0.0) return 1.0;

  double mutual = 0.0;
  for (const auto& [key, count] : joint) {
    const double nij = static_cast<double>(count);
    const double ni = static_cast<double>(count_a[key.first]);
    const double nj = static_cast<double>(count_b[key.second]);
    mutual += (nij / n) * std::log(nij * n / (ni * nj));
  }
  return std::clamp(2.0 * mutual / (ha + hb), 0.0, 1.0);
}

std::vector<SeriesPoint> smoothness_series(std::span<const Partition> partitions) {
  if (partitions.size() < 2) throw ContractError("smoothness_series: need at least two partitions");
  std::vector<SeriesPoint> out;
  auto current = partitions.front().labels();
  for (std::size_t k = 0; k + 1 < partitions.size(); ++k) {
    auto next = partitions[k + 1].labels();
    const NodeSet shared = set_intersection(current.nodes(), next.nodes());
    SeriesPoint pt{partitions[k].t, std::nullopt, shared.size()};
    if (!shared.empty()) pt.value = nmi(current.restricted_to(shared), next.restricted_to(shared));
    out.push_back(pt);
    current = std::move(next);
  }
  return out;
}

std::vector<SeriesPoint> ground_truth_series(std::span<const Partition> partitions, const GroundTruth& truth) {
  std::vector<SeriesPoint> out;
  for (const auto& p : partitions) {
    const auto detected = p.labels();
    const auto& expected = truth.at(p.t);
    const NodeSet shared = set_intersection(detected.nodes(), expected.nodes());
    SeriesPoint pt{p.t, std::nullopt, shared.size()};
    if (!shared.empty()) pt.value = nmi(detected.restricted_to(shared), expected.restricted_to(shared));
    out.push_back(pt);
  }
  return out;
}

std::vector<PersistencePoint> persistence_series(const DynamicNetwork& net, std::span<const Partition> partitions) {
  if (partitions.size() != net.length()) throw ContractError("persistence_series: partitions not aligned with snapshots");
  std::vector<NodeSet> present;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    if (partitions[k].t != net.snapshots[k].timestep()) {
      throw ContractError("persistence_series: partitions not aligned with snapshots");
    }
    const auto nodes = net.snapshots[k].nodes();
    present.emplace_back(nodes.begin(), nodes.end());
  }
  return persistence_with(partitions, present);
}

std::vector<PersistencePoint> persistence_series(std::span<const Partition> partitions) {
  std::vector<NodeSet> present;
  for (const auto& p : partitions) present.push_back(p.nodes());
  return persistence_with(partitions, present);
}

}  // namespace leadtrack
