#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "leadtrack/benchgen.hpp"
#include "leadtrack/errors.hpp"
#include "leadtrack/pipeline.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace leadtrack;
using testutil::clique_edges;
using testutil::concat;
using testutil::graph;

namespace {

DynamicNetwork network(const std::vector<std::vector<Edge>>& steps) {
  DynamicNetwork net;
  for (std::size_t k = 0; k < steps.size(); ++k) net.snapshots.push_back(graph(steps[k], static_cast<int>(k + 1)));
  return net;
}

std::vector<LifecycleEvent> events_at(const RunResult& r, int t) {
  std::vector<LifecycleEvent> out;
  for (const auto& e : r.events)
    if (e.t == t) out.push_back(e);
  return out;
}

}  // namespace

TEST(Pipeline, StableCliquesKeepIdsAndRaiseNoEvents) {
  const auto two_k5 = concat(clique_edges(0, 5), clique_edges(5, 5));
  const auto r = run(network({two_k5, two_k5, two_k5}));
  ASSERT_EQ(r.partitions.size(), 3u);
  EXPECT_EQ(events_at(r, 1).size(), 2u);
  EXPECT_TRUE(events_at(r, 2).empty());
  EXPECT_TRUE(events_at(r, 3).empty());
  for (const auto& p : r.partitions) {
    ASSERT_EQ(p.communities.size(), 2u);
    EXPECT_EQ(p.communities[0].id, 1u);
    EXPECT_EQ(p.communities[0].members, (NodeSet{0, 1, 2, 3, 4}));
    EXPECT_EQ(p.communities[1].id, 2u);
    EXPECT_EQ(p.communities[1].leaders.leaders, (NodeSet{5, 6, 7, 8, 9}));
  }
}

TEST(Pipeline, RepeatedCliqueUnionGivesIdenticalPartitions) {
  const auto cliques = concat(concat(clique_edges(0, 4), clique_edges(4, 5)), clique_edges(9, 6));
  const auto r = run(network({cliques, cliques, cliques, cliques, cliques}), {.seed = 9});
  ASSERT_EQ(r.partitions[0].communities.size(), 3u);
  EXPECT_EQ(r.events.size(), 3u);
  for (int t = 2; t <= 5; ++t) {
    EXPECT_TRUE(events_at(r, t).empty()) << "t=" << t;
    EXPECT_EQ(r.partitions[t - 1].communities, r.partitions[0].communities);
  }
}

TEST(Pipeline, VanishedCommunityDissolves) {
  const auto two_k5 = concat(clique_edges(0, 5), clique_edges(5, 5));
  const auto r = run(network({two_k5, clique_edges(0, 5)}));
  EXPECT_EQ(events_at(r, 2), (std::vector<LifecycleEvent>{{2, 2, EventKind::Dissolved}}));
  ASSERT_EQ(r.partitions[1].communities.size(), 1u);
  EXPECT_EQ(r.partitions[1].communities[0].id, 1u);
}

TEST(Pipeline, NewCliqueIsBornWithFreshId) {
  const auto base = testutil::bridged_k5s();
  const auto grown = concat(base, clique_edges(10, 6));
  const auto r = run(network({base, base, grown}));
  const auto born = events_at(r, 3);
  ASSERT_EQ(born.size(), 1u);
  EXPECT_EQ(born[0].kind, EventKind::Born);
  const auto* c = r.partitions[2].find(born[0].id);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->members, (NodeSet{10, 11, 12, 13, 14, 15}));
  EXPECT_GT(born[0].id, 2u);
}

TEST(Pipeline, LosingAllLeadersDissolves) {
  // Star-like community: hub 0 is the only leader.
  std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
  const auto other = clique_edges(10, 4);
  std::vector<Edge> without_hub{{1, 2}, {3, 4}};
  const auto r = run(network({concat(star, other), concat(star, other), concat(without_hub, other)}));
  ASSERT_EQ(r.partitions[0].communities.size(), 2u);
  EXPECT_EQ(r.partitions[1].communities[0].leaders.leaders, (NodeSet{0}));
  const auto ev = events_at(r, 3);
  const auto dissolved = std::count_if(ev.begin(), ev.end(), [](auto& e) { return e.kind == EventKind::Dissolved; });
  EXPECT_EQ(dissolved, 1);
  EXPECT_EQ(r.partitions[2].find(1), nullptr);
  EXPECT_NE(r.partitions[2].find(2), nullptr);
}

TEST(Pipeline, SingleSnapshot) {
  const auto r = run(network({testutil::bridged_k5s()}));
  ASSERT_EQ(r.partitions.size(), 1u);
  EXPECT_EQ(r.events.size(), r.partitions[0].communities.size());
  for (const auto& e : r.events) EXPECT_EQ(e.kind, EventKind::Born);
  EXPECT_EQ(r.step_seconds.size(), 1u);
}

TEST(Pipeline, OutputDoesNotDependOnThreadCount) {
  EventBenchConfig cfg;
  cfg.communities = 12;
  cfg.floaters = 30;
  cfg.timesteps = 6;
  cfg.event = BenchEvent::MergeSplit;
  cfg.seed = 12;
  const auto bench = generate_events(cfg);
  const auto one = run(bench.network, {.seed = 5, .threads = 1});
  const auto four = run(bench.network, {.seed = 5, .threads = 4});
  EXPECT_EQ(one.partitions, four.partitions);
  EXPECT_EQ(one.events, four.events);
  EXPECT_EQ(one.timelines, four.timelines);
}

TEST(Pipeline, ObserverSeesStrictlyIncreasingTraces) {
  const auto bench = generate_kawadia(KawadiaConfig{.timesteps = 6, .seed = 21});
  std::size_t calls = 0;
  DetectorOptions opts;
  opts.threads = 3;
  opts.on_expansion = [&](int t, CommunityId, const ExpansionTrace& trace) {
    ++calls;
    EXPECT_GE(t, 2);
    double prev = trace.initial_ic;
    for (const auto& s : trace.steps) {
      EXPECT_GT(s.ic, prev);
      prev = s.ic;
    }
  };
  run(bench.network, opts);
  EXPECT_GT(calls, 0u);
}

TEST(Pipeline, IdsAreNeverReused) {
  const auto bench = generate_kawadia(KawadiaConfig{.timesteps = 10, .seed = 4});
  const auto r = run(bench.network, {.seed = 1});
  std::set<CommunityId> born;
  for (const auto& e : r.events)
    if (e.kind == EventKind::Born) EXPECT_TRUE(born.insert(e.id).second);
  for (const auto& p : r.partitions)
    for (const auto& c : p.communities) EXPECT_TRUE(born.count(c.id));
}

TEST(Pipeline, TimelinesFollowEvents) {
  const auto two_k5 = concat(clique_edges(0, 5), clique_edges(5, 5));
  const auto r = run(network({two_k5, two_k5, clique_edges(0, 5)}));
  ASSERT_EQ(r.timelines.size(), 2u);
  EXPECT_EQ(r.timelines[0].id, 1u);
  EXPECT_FALSE(r.timelines[0].death_t.has_value());
  EXPECT_EQ(r.timelines[0].steps.size(), 3u);
  EXPECT_EQ(r.timelines[1].birth_t, 1);
  EXPECT_EQ(r.timelines[1].death_t, 3);
  EXPECT_EQ(r.timelines[1].steps.size(), 2u);
  EXPECT_EQ(r.timelines[1].steps[1].leaders, (NodeSet{5, 6, 7, 8, 9}));
}

TEST(Pipeline, StepRequiresPreviousTimestep) {
  DynamicDetector d;
  auto g = graph(clique_edges(0, 3), 1);
  auto first = d.bootstrap(g, 0);
  EXPECT_THROW(d.step(g.with_timestep(3), first.partition, 0), ContractError);
  EXPECT_THROW(run(DynamicNetwork{}), ContractError);
}

TEST(Pipeline, BaselineRelabelsEveryStep) {
  const auto two_k5 = concat(clique_edges(0, 5), clique_edges(5, 5));
  std::vector<double> secs;
  const auto p = run_static_baseline(network({two_k5, two_k5}), 0, &secs);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(secs.size(), 2u);
  EXPECT_EQ(p[1].communities[0].id, 3u);
  EXPECT_EQ(p[1].communities[0].members, p[0].communities[0].members);
}

TEST(DeriveSeed, DistinctStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 100; ++s) seen.insert(derive_seed(7, s));
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
}
