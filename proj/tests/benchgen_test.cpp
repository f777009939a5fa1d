#include <gtest/gtest.h>

#include <map>
#include <set>

#include "leadtrack/benchgen.hpp"
#include "leadtrack/errors.hpp"

using namespace leadtrack;

namespace {

std::map<Label, std::size_t> label_sizes(const LabeledPartition& p) {
  std::map<Label, std::size_t> out;
  for (const auto& [v, l] : p.entries()) ++out[l];
  return out;
}

EventBenchConfig small_events(BenchEvent e, std::uint64_t seed) {
  EventBenchConfig cfg;
  cfg.communities = 20;
  cfg.floaters = 60;
  cfg.timesteps = 6;
  cfg.event = e;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(Kawadia, BirthProbabilityKeepsDensity) {
  KawadiaConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.birth_p(), 0.1);
  cfg.death_p = 0.2;
  cfg.intra_p = 0.5;
  EXPECT_DOUBLE_EQ(cfg.birth_p(), 0.2);
}

TEST(Kawadia, DefaultInstanceHasTwentyCommunitiesOfFive) {
  const auto b = generate_kawadia(KawadiaConfig{});
  ASSERT_EQ(b.network.length(), 25u);
  EXPECT_EQ(b.network.symbols.size(), 100u);
  EXPECT_EQ(b.chain_pair_count, 20u * 10u);
  for (int t = 1; t <= 25; ++t) {
    const auto& truth = b.truth.at(t);
    EXPECT_EQ(truth.nodes(), NodeSet(b.network.at(t).nodes().begin(), b.network.at(t).nodes().end()));
    for (const auto& [v, l] : truth.entries()) EXPECT_EQ(l, v / 5);
    for (const auto& [l, n] : label_sizes(truth)) EXPECT_LE(n, 5u);
  }
  EXPECT_EQ(b.network.symbols.label(42), "42");
}

TEST(Kawadia, FrozenChainWhenDeathProbabilityIsZero) {
  KawadiaConfig cfg;
  cfg.death_p = 0.0;
  cfg.timesteps = 5;
  const auto b = generate_kawadia(cfg);
  for (int t = 2; t <= 5; ++t) EXPECT_EQ(b.network.at(t).edges(), b.network.at(1).edges());
}

TEST(Kawadia, ChainDensityStaysNearIntraP) {
  KawadiaConfig cfg;
  cfg.timesteps = 200;
  cfg.seed = 5;
  const auto b = generate_kawadia(cfg);
  double total = 0;
  for (auto c : b.chain_edge_counts) total += static_cast<double>(c);
  const double density = total / (200.0 * static_cast<double>(b.chain_pair_count));
  EXPECT_NEAR(density, 0.2, 0.02);
}

TEST(Kawadia, SeedDeterminesOutput) {
  KawadiaConfig cfg;
  cfg.timesteps = 4;
  cfg.seed = 8;
  const auto a = generate_kawadia(cfg);
  const auto b = generate_kawadia(cfg);
  EXPECT_EQ(a.network, b.network);
  cfg.seed = 9;
  EXPECT_NE(generate_kawadia(cfg).network, a.network);
}

TEST(Kawadia, InvalidConfig) {
  EXPECT_THROW(generate_kawadia(KawadiaConfig{.nodes = 10, .communities = 3}), ConfigError);
  EXPECT_THROW(generate_kawadia(KawadiaConfig{.intra_p = 0.9, .death_p = 0.5}), ConfigError);
  EXPECT_THROW(generate_kawadia(KawadiaConfig{.timesteps = 0}), ConfigError);
}

TEST(EventBench, EventNamesRoundTrip) {
  for (auto e : {BenchEvent::None, BenchEvent::Intermittent, BenchEvent::ExpandContract, BenchEvent::BirthDeath,
                 BenchEvent::MergeSplit})
    EXPECT_EQ(parse_bench_event(to_string(e)), e);
  EXPECT_THROW(parse_bench_event("explode"), ConfigError);
}

TEST(EventBench, IntermittentHidesExactlyOneOfTen) {
  EventBenchConfig cfg;
  cfg.communities = 10;
  cfg.floaters = 0;
  cfg.timesteps = 2;
  cfg.event = BenchEvent::Intermittent;
  cfg.p_in = 0.9;
  cfg.activity_exponent = 0.0;
  cfg.seed = 1;
  const auto b = generate_events(cfg);
  EXPECT_EQ(b.tallies[1].hidden, 1u);
  EXPECT_EQ(label_sizes(b.truth.at(1)).size(), 10u);
  EXPECT_EQ(label_sizes(b.truth.at(2)).size(), 9u);
}

TEST(EventBench, CommunityCountsFollowTallies) {
  for (auto e : {BenchEvent::BirthDeath, BenchEvent::MergeSplit, BenchEvent::ExpandContract}) {
    const auto b = generate_events(small_events(e, 3));
    ASSERT_EQ(b.community_counts.size(), 6u);
    EXPECT_EQ(b.community_counts[0], 20u);
    for (std::size_t k = 1; k < 6; ++k) {
      const auto& tl = b.tallies[k];
      EXPECT_EQ(b.community_counts[k] + tl.deaths + tl.merges, b.community_counts[k - 1] + tl.births + tl.splits)
          << to_string(e) << " step " << k + 1;
    }
  }
  const auto bd = generate_events(small_events(BenchEvent::BirthDeath, 3));
  EXPECT_EQ(bd.tallies[1].deaths, 2u);
  EXPECT_EQ(bd.tallies[1].births + bd.tallies[1].skipped, 2u);
  const auto ms = generate_events(small_events(BenchEvent::MergeSplit, 3));
  EXPECT_EQ(ms.tallies[1].merges, 2u);
  EXPECT_EQ(ms.tallies[1].splits, 2u);
  const auto ec = generate_events(small_events(BenchEvent::ExpandContract, 3));
  EXPECT_EQ(ec.tallies[1].expansions + ec.tallies[1].contractions + ec.tallies[1].skipped, 2u);
}

TEST(EventBench, TruthCoversExactlyTheSnapshotNodes) {
  for (auto e : {BenchEvent::None, BenchEvent::Intermittent, BenchEvent::ExpandContract, BenchEvent::BirthDeath,
                 BenchEvent::MergeSplit}) {
    const auto b = generate_events(small_events(e, 11));
    for (int t = 1; t <= 6; ++t) {
      const auto nodes = b.network.at(t).nodes();
      EXPECT_EQ(b.truth.at(t).nodes(), NodeSet(nodes.begin(), nodes.end())) << to_string(e) << " t=" << t;
    }
  }
}

TEST(EventBench, NoEventsKeepsLabelsFixed) {
  const auto b = generate_events(small_events(BenchEvent::None, 2));
  std::map<NodeId, Label> first;
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(b.community_counts[t - 1], 20u);
    for (const auto& [v, l] : b.truth.at(t).entries()) {
      auto [it, fresh] = first.emplace(v, l);
      EXPECT_EQ(it->second, l);
    }
  }
  EXPECT_NE(b.network.at(1).edges(), b.network.at(2).edges());
}

TEST(EventBench, SizesWithinBoundsAndDeterministic) {
  EventBenchConfig cfg;
  cfg.seed = 4;
  cfg.timesteps = 2;
  const auto b = generate_events(cfg);
  for (const auto& [l, n] : label_sizes(b.truth.at(1))) EXPECT_LE(n, cfg.max_size);
  EXPECT_GT(b.network.symbols.size(), 900u);
  EXPECT_LT(b.network.symbols.size(), 1100u);
  EXPECT_EQ(generate_events(cfg).network, b.network);
}

TEST(EventBench, InvalidConfig) {
  EventBenchConfig cfg;
  cfg.min_size = 1;
  EXPECT_THROW(generate_events(cfg), ConfigError);
  cfg = {};
  cfg.activity_exponent = 1.5;
  EXPECT_THROW(generate_events(cfg), ConfigError);
  cfg = {};
  cfg.p_in = 1.5;
  EXPECT_THROW(generate_events(cfg), ConfigError);
}
