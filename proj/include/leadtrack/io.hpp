#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "leadtrack/graph.hpp"
#include "leadtrack/metrics.hpp"

namespace leadtrack {

/// Stream format: one `src dst timestamp` record per line, whitespace
/// separated; blank lines and lines starting with '#' are skipped.
/// ParseError with the line number on malformed input.
std::vector<TemporalEdgeRecord> read_edge_stream(std::istream& in, const std::string& source = "<stream>");
std::vector<TemporalEdgeRecord> read_edge_stream_file(const std::filesystem::path& path);

/// Pre-sliced format: `snapshot_<t>.edges` files, one `src dst` pair per
/// line, with t = 1..Δ contiguous. Other files in the directory are ignored.
DynamicNetwork read_snapshot_dir(const std::filesystem::path& dir);
void write_snapshot_dir(const DynamicNetwork& net, const std::filesystem::path& dir);

/// `node community_label` per line. `path` is either a directory of
/// `truth_<t>.txt` files (one per snapshot) or a single file applied to
/// every timestep. Unknown node labels are interned into `symbols`.
GroundTruth read_ground_truth(const std::filesystem::path& path, SymbolTable& symbols, std::size_t timesteps);
void write_ground_truth_dir(const GroundTruth& truth, const SymbolTable& symbols, const std::filesystem::path& dir);

std::filesystem::path snapshot_file_name(int t);
std::filesystem::path truth_file_name(int t);

}  // namespace leadtrack
