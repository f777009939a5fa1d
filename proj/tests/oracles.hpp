#pragma once

// Reference implementations used only by the tests. They work from plain
// edge lists and exhaustive search and share no code with the library
// algorithms they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "leadtrack/graph.hpp"

namespace oracle {

using leadtrack::Edge;
using leadtrack::NodeId;
using NodeList = std::vector<NodeId>;

inline std::vector<Edge> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return edges;
}

struct AdjacencyMatrix {
  std::vector<NodeId> nodes;
  std::map<NodeId, std::size_t> pos;
  std::vector<std::vector<char>> adj;

  AdjacencyMatrix(NodeList node_list, const std::vector<Edge>& edges) : nodes(std::move(node_list)) {
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = i;
    adj.assign(nodes.size(), std::vector<char>(nodes.size(), 0));
    for (const auto& [u, v] : edges) {
      if (u == v || !pos.count(u) || !pos.count(v)) continue;
      adj[pos[u]][pos[v]] = adj[pos[v]][pos[u]] = 1;
    }
  }
  bool edge(NodeId u, NodeId v) const { return adj[pos.at(u)][pos.at(v)]; }
};

// Every vertex subset checked for the clique and maximality conditions.
inline std::vector<NodeList> brute_force_maximal_cliques(const NodeList& nodes, const std::vector<Edge>& edges) {
  AdjacencyMatrix m(nodes, edges);
  const std::size_t n = nodes.size();
  std::vector<NodeList> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      for (std::size_t j = i + 1; j < n && clique; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !m.adj[i][j]) clique = false;
    if (!clique) continue;
    bool maximal = true;
    for (std::size_t k = 0; k < n && maximal; ++k) {
      if (mask >> k & 1) continue;
      bool extends = true;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i & 1) && !m.adj[i][k]) extends = false;
      if (extends) maximal = false;
    }
    if (!maximal) continue;
    NodeList c;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) c.push_back(nodes[i]);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Edge> induced_edges(const std::vector<Edge>& edges, const NodeList& keep) {
  std::set<NodeId> k(keep.begin(), keep.end());
  std::vector<Edge> out;
  for (const auto& e : edges)
    if (k.count(e.first) && k.count(e.second)) out.push_back(e);
  return out;
}

inline std::size_t count_neighbours_in(const std::vector<Edge>& edges, NodeId v, const NodeList& set) {
  std::set<NodeId> s(set.begin(), set.end());
  std::size_t c = 0;
  for (const auto& [a, b] : edges) {
    if (a == v && s.count(b)) ++c;
    if (b == v && s.count(a)) ++c;
  }
  return c;
}

// Leader definition evaluated literally: anchor by recount, ego network
// inside the community, every maximal clique by subset search.
inline NodeList brute_force_leaders(const std::vector<Edge>& edges, NodeList members, NodeId* anchor_out = nullptr) {
  std::sort(members.begin(), members.end());
  const auto inner = induced_edges(edges, members);
  NodeId anchor = members.front();
  std::size_t best = 0;
  for (NodeId v : members) {
    const std::size_t d = count_neighbours_in(inner, v, members);
    if (d > best) {
      best = d;
      anchor = v;
    }
  }
  if (anchor_out) *anchor_out = anchor;
  NodeList ego{anchor};
  for (NodeId v : members)
    if (v != anchor && count_neighbours_in(inner, v, {anchor}) == 1) ego.push_back(v);
  std::sort(ego.begin(), ego.end());
  const auto cliques = brute_force_maximal_cliques(ego, induced_edges(inner, ego));
  NodeList leaders;
  for (NodeId v : ego) {
    bool everywhere = true;
    bool seen = false;
    for (const auto& c : cliques) {
      if (!std::binary_search(c.begin(), c.end(), anchor)) continue;
      seen = true;
      if (!std::binary_search(c.begin(), c.end(), v)) everywhere = false;
    }
    if (seen && everywhere) leaders.push_back(v);
  }
  return leaders;
}

inline std::pair<std::int64_t, std::int64_t> recount_eta_mu(const std::vector<Edge>& edges, const NodeList& members) {
  std::set<NodeId> s(members.begin(), members.end());
  std::int64_t eta = 0, mu = 0;
  for (const auto& [a, b] : edges) {
    const int inside = static_cast<int>(s.count(a)) + static_cast<int>(s.count(b));
    if (inside == 2) ++eta;
    if (inside == 1) ++mu;
  }
  return {eta, mu};
}

// Q = (1/2m) Σ_ij [A_ij − k_i k_j / 2m] δ(c_i, c_j), as a double loop.
inline double naive_modularity(const NodeList& nodes, const std::vector<Edge>& edges, const std::map<NodeId, int>& label) {
  AdjacencyMatrix m(nodes, edges);
  const double two_m = 2.0 * static_cast<double>(edges.size());
  std::vector<double> k(nodes.size(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) k[i] += m.adj[i][j];
  double q = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (label.at(nodes[i]) == label.at(nodes[j])) q += m.adj[i][j] - k[i] * k[j] / two_m;
  return q / two_m;
}

// NMI via joint entropy: I = H(A) + H(B) − H(A,B), log base 2.
inline double contingency_nmi(const std::vector<int>& a, const std::vector<int>& b) {
  const double n = static_cast<double>(a.size());
  std::map<int, double> ca, cb;
  std::map<std::pair<int, int>, double> cab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    cab[{a[i], b[i]}] += 1;
  }
  auto h = [n](const auto& counts) {
    double s = 0;
    for (const auto& [key, c] : counts) s -= (c / n) * std::log2(c / n);
    return s;
  };
  const double ha = h(ca), hb = h(cb), hab = h(cab);
  if (ha + hb == 0.0) return 1.0;
  return 2.0 * (ha + hb - hab) / (ha + hb);
}

}  // namespace oracle
