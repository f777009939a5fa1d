#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "leadtrack/graph.hpp"
#include "leadtrack/metrics.hpp"

namespace leadtrack {

/// Planted communities in a static Erdős–Rényi background whose
/// intra-community edges follow a two-state Markov chain.
struct KawadiaConfig {
  std::size_t nodes = 100;
  std::size_t communities = 20;
  double background_p = 0.05;  // p_r
  double intra_p = 0.2;        // p_c, also the stationary intra density
  double death_p = 0.4;        // p, per-step removal of a present intra edge
  int timesteps = 25;
  std::uint64_t seed = 0;

  /// q = p·p_c / (1 − p_c), the per-step birth probability of an absent
  /// intra edge that keeps the density at p_c.
  double birth_p() const { return death_p * intra_p / (1.0 - intra_p); }
  /// ConfigError on invalid parameters.
  void validate() const;
};

enum class BenchEvent { None, Intermittent, ExpandContract, BirthDeath, MergeSplit };

std::string_view to_string(BenchEvent e);
/// ConfigError for unknown names.
BenchEvent parse_bench_event(std::string_view name);

/// Planted partition with power-law community sizes, evolved by one kind
/// of community event per step. Edges are redrawn every step from the
/// current ground truth.
struct EventBenchConfig {
  std::size_t communities = 50;
  std::size_t min_size = 10;
  std::size_t max_size = 50;
  double size_exponent = 2.5;
  /// Nodes outside every community at t=1; events draw from and return
  /// to this pool. Floating nodes are absent from the snapshot.
  std::size_t floaters = 100;
  double p_in = 0.3;
  double p_out = 0.002;
  /// Power-law exponent of per-node activity weights (fixed over time,
  /// mean 1) scaling every edge probability. 0 disables heterogeneity.
  double activity_exponent = 2.5;
  int timesteps = 15;
  BenchEvent event = BenchEvent::None;
  double intermittent_fraction = 0.1;
  std::size_t expand_contract_count = 2;
  double expand_contract_fraction = 0.25;
  std::size_t birth_count = 2;
  std::size_t death_count = 2;
  std::size_t merge_count = 2;
  std::size_t split_count = 2;
  std::uint64_t seed = 0;

  void validate() const;
};

/// What happened to the ground truth going into one timestep.
struct EventTally {
  std::size_t hidden = 0;
  std::size_t expansions = 0;
  std::size_t contractions = 0;
  std::size_t births = 0;
  std::size_t deaths = 0;
  std::size_t merges = 0;
  std::size_t splits = 0;
  std::size_t skipped = 0;
};

struct Benchmark {
  DynamicNetwork network;
  GroundTruth truth;
  /// Communities in the ground truth at each step (hidden ones included).
  std::vector<std::size_t> community_counts;
  /// Per step; entry 0 is empty.
  std::vector<EventTally> tallies;
  /// Kawadia only: intra pairs in the chain, and how many are present per
  /// step (background edges that land on an intra pair are not counted).
  std::size_t chain_pair_count = 0;
  std::vector<std::size_t> chain_edge_counts;
};

Benchmark generate_kawadia(const KawadiaConfig& cfg);
Benchmark generate_events(const EventBenchConfig& cfg);

}  // namespace leadtrack
