#pragma once

#include <functional>
#include <span>
#include <vector>

#include "leadtrack/graph.hpp"

namespace leadtrack {

/// Sorted member list; every pair adjacent.
using Clique = NodeSet;

/// Called once per maximal clique with its members sorted by NodeId.
/// Returning false stops the enumeration.
using CliqueVisitor = std::function<bool(std::span<const NodeId>)>;

/// Maximal-clique enumeration in the style of Eppstein, Löffler and Strash:
/// an outer loop over a degeneracy ordering, and Bron–Kerbosch with
/// Tomita pivoting inside each vertex's later-neighbourhood. Runtime is
/// O(d·n·3^{d/3}) for degeneracy d. Returns false if the visitor stopped early.
bool for_each_maximal_clique(const SnapshotGraph& g, const CliqueVisitor& visit);

/// All maximal cliques, sorted lexicographically. Isolated nodes yield
/// singleton cliques.
std::vector<Clique> maximal_cliques(const SnapshotGraph& g);

/// Maximal cliques of ego_network(g, v) that contain v. Throws LookupError
/// if v is not in g.
std::vector<Clique> maximal_cliques_containing(const SnapshotGraph& g, NodeId v);

/// Vertex order produced by repeatedly removing a minimum-degree vertex,
/// as local indices. Also reports the degeneracy.
std::vector<std::uint32_t> degeneracy_order(const SnapshotGraph& g, std::size_t* degeneracy = nullptr);

}  // namespace leadtrack
