#include <gtest/gtest.h>

#include <map>
#include <random>

#include "leadtrack/errors.hpp"
#include "leadtrack/labeled_partition.hpp"
#include "leadtrack/metrics.hpp"
#include "leadtrack/static_cluster.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace leadtrack;
using testutil::graph;

namespace {

std::map<NodeId, int> label_map(const std::vector<NodeSet>& parts) {
  std::map<NodeId, int> out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (NodeId v : parts[i]) out[v] = static_cast<int>(i);
  return out;
}

bool is_disjoint_cover(const SnapshotGraph& g, const std::vector<NodeSet>& parts) {
  NodeSet all;
  for (const auto& p : parts) {
    if (p.empty()) return false;
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  return all == NodeSet(g.nodes().begin(), g.nodes().end());
}

// Maximum modularity over every set partition (restricted growth strings).
double exhaustive_best_modularity(const oracle::NodeList& nodes, const std::vector<Edge>& edges) {
  const std::size_t n = nodes.size();
  std::vector<int> rg(n, 0), mx(n, 0);
  double best = -1.0;
  for (;;) {
    std::map<NodeId, int> label;
    for (std::size_t i = 0; i < n; ++i) label[nodes[i]] = rg[i];
    best = std::max(best, oracle::naive_modularity(nodes, edges, label));
    std::size_t i = n - 1;
    while (i > 0 && rg[i] > mx[i - 1]) --i;
    if (i == 0) break;
    ++rg[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      rg[j] = 0;
      mx[j] = std::max(mx[j - 1], rg[j - 1]);
    }
    mx[i] = std::max(mx[i - 1], rg[i - 1]);
  }
  return best;
}

}  // namespace

TEST(Modularity, TwoTrianglesIsOneHalf) {
  auto g = graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const std::vector<NodeSet> parts{{0, 1, 2}, {3, 4, 5}};
  EXPECT_NEAR(modularity(g, parts), 0.5, 1e-12);
}

TEST(Modularity, SingleCommunityIsZero) {
  auto g = graph(testutil::bridged_k5s());
  const std::vector<NodeSet> parts{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  EXPECT_NEAR(modularity(g, parts), 0.0, 1e-12);
}

TEST(Modularity, Contracts) {
  auto g = graph({{0, 1}, {1, 2}});
  EXPECT_THROW(modularity(g, std::vector<NodeSet>{{0, 1}}), ContractError);
  EXPECT_THROW(modularity(g, std::vector<NodeSet>{{0, 1}, {1, 2}}), ContractError);
  EXPECT_THROW(modularity(graph({}, 1, {0, 1}), std::vector<NodeSet>{{0, 1}}), UndefinedValueError);
}

TEST(Modularity, MatchesDoubleSumOnRandomPartitions) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> label(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto edges = oracle::random_edges(20, 0.25, rng);
    if (edges.empty()) continue;
    auto g = graph(edges);
    std::vector<NodeSet> parts(5);
    for (NodeId v : g.nodes()) parts[label(rng)].push_back(v);
    std::erase_if(parts, [](const NodeSet& p) { return p.empty(); });
    oracle::NodeList nodes(g.nodes().begin(), g.nodes().end());
    EXPECT_NEAR(modularity(g, parts), oracle::naive_modularity(nodes, edges, label_map(parts)), 1e-9);
  }
}

TEST(ClusterStatic, BridgedCliquesReachExhaustiveOptimum) {
  const auto edges = testutil::bridged_k5s();
  auto g = graph(edges);
  const auto result = cluster_static(g, 1);
  EXPECT_EQ(result.communities, (std::vector<NodeSet>{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
  oracle::NodeList nodes(g.nodes().begin(), g.nodes().end());
  EXPECT_NEAR(result.modularity, exhaustive_best_modularity(nodes, edges), 1e-12);
}

TEST(ClusterStatic, SingleCliqueStaysWhole) {
  auto g = graph(testutil::clique_edges(0, 6));
  const auto result = cluster_static(g);
  EXPECT_EQ(result.communities, (std::vector<NodeSet>{{0, 1, 2, 3, 4, 5}}));
  EXPECT_NEAR(result.modularity, 0.0, 1e-12);
}

TEST(ClusterStatic, EdgelessAndEmptyGraphs) {
  auto g = graph({}, 1, {3, 1, 2});
  const auto result = cluster_static(g);
  EXPECT_EQ(result.communities, (std::vector<NodeSet>{{1}, {2}, {3}}));
  EXPECT_EQ(result.modularity, 0.0);
  EXPECT_TRUE(cluster_static(SnapshotGraph{}).communities.empty());
}

TEST(ClusterStatic, PlantedPartitionIsRecovered) {
  std::mt19937_64 rng(2);
  std::bernoulli_distribution in(0.8), out(0.02);
  std::vector<Edge> edges;
  std::vector<LabeledPartition::Entry> truth;
  for (NodeId u = 0; u < 200; ++u) {
    truth.emplace_back(u, u / 20);
    for (NodeId v = u + 1; v < 200; ++v)
      if (u / 20 == v / 20 ? in(rng) : out(rng)) edges.emplace_back(u, v);
  }
  auto g = graph(edges);
  const auto result = cluster_static(g, 4);
  EXPECT_GE(nmi(LabeledPartition::from_communities(result.communities), LabeledPartition(truth)), 0.9);
}

TEST(ClusterStatic, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const auto edges = oracle::random_edges(60, 0.05 + 0.01 * (trial % 5), rng);
    auto g = graph(edges);
    const auto result = cluster_static(g, trial);
    EXPECT_TRUE(is_disjoint_cover(g, result.communities));
    for (std::size_t i = 1; i < result.communities.size(); ++i)
      EXPECT_LT(result.communities[i - 1].front(), result.communities[i].front());
    for (std::size_t i = 1; i < result.level_modularity.size(); ++i)
      EXPECT_GE(result.level_modularity[i], result.level_modularity[i - 1] - 1e-12);
    oracle::NodeList nodes(g.nodes().begin(), g.nodes().end());
    EXPECT_NEAR(result.modularity, oracle::naive_modularity(nodes, edges, label_map(result.communities)), 1e-9);
    EXPECT_EQ(result.communities, cluster_static(g, trial).communities);
  }
}

TEST(ClusterLeftovers, ClustersOnlyTheGivenNodes) {
  auto g = graph(testutil::bridged_k5s(), 1, {20});
  const NodeSet left{5, 6, 7, 8, 9, 20};
  const auto parts = cluster_leftovers(g, left, 3);
  EXPECT_EQ(parts, (std::vector<NodeSet>{{5, 6, 7, 8, 9}, {20}}));
  EXPECT_TRUE(cluster_leftovers(g, NodeSet{}, 3).empty());
  EXPECT_EQ(cluster_leftovers(g, NodeSet{0, 9}, 3), (std::vector<NodeSet>{{0}, {9}}));
}
