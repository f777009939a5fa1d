#include "leadtrack/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "leadtrack/errors.hpp"

namespace leadtrack {
namespace fs = std::filesystem;
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string field; ss >> field;) out.push_back(std::move(field));
  return out;
}

bool skip_line(const std::vector<std::string>& fields) { return fields.empty() || fields.front().starts_with('#'); }

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Matches `<prefix><digits><suffix>`; returns the number.
std::optional<int> numbered_name(const std::string& name, std::string_view prefix, std::string_view suffix) {
  if (name.size() <= prefix.size() + suffix.size() || !name.starts_with(prefix) || !name.ends_with(suffix)) {
    return std::nullopt;
  }
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size() - suffix.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 1) return std::nullopt;
  return value;
}

std::map<int, fs::path> numbered_files(const fs::path& dir, std::string_view prefix, std::string_view suffix) {
  if (!fs::is_directory(dir)) throw std::runtime_error(dir.string() + " is not a directory");
  std::map<int, fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (auto t = numbered_name(entry.path().filename().string(), prefix, suffix)) {
      if (!files.emplace(*t, entry.path()).second) {
        throw ParseError(dir.string(), 0, "timestep " + std::to_string(*t) + " appears twice");
      }
    }
  }
  return files;
}

LabeledPartition read_truth_file(const fs::path& path, SymbolTable& symbols) {
  auto in = open_input(path);
  std::map<std::string, Label> label_ids;
  std::vector<LabeledPartition::Entry> entries;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto fields = split_fields(line);
    if (skip_line(fields)) continue;
    if (fields.size() != 2) throw ParseError(path.string(), line_no, "expected `node community_label`");
    const auto [it, inserted] = label_ids.try_emplace(fields[1], label_ids.size());
    entries.emplace_back(symbols.intern(fields[0]), it->second);
  }
  try {
    return LabeledPartition(std::move(entries));
  } catch (const ContractError& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

}  // namespace

fs::path snapshot_file_name(int t) { return "snapshot_" + std::to_string(t) + ".edges"; }
fs::path truth_file_name(int t) { return "truth_" + std::to_string(t) + ".txt"; }

std::vector<TemporalEdgeRecord> read_edge_stream(std::istream& in, const std::string& source) {
  std::vector<TemporalEdgeRecord> records;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto fields = split_fields(line);
    if (skip_line(fields)) continue;
    if (fields.size() != 3) throw ParseError(source, line_no, "expected `src dst timestamp`");
    TemporalEdgeRecord rec{std::move(fields[0]), std::move(fields[1]), 0};
    const auto& ts = fields[2];
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), rec.timestamp);
    if (ec != std::errc{} || ptr != ts.data() + ts.size()) {
      throw ParseError(source, line_no, "timestamp '" + ts + "' is not an integer");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TemporalEdgeRecord> read_edge_stream_file(const fs::path& path) {
  auto in = open_input(path);
  return read_edge_stream(in, path.string());
}

DynamicNetwork read_snapshot_dir(const fs::path& dir) {
  const auto files = numbered_files(dir, "snapshot_", ".edges");
  if (files.empty()) throw EmptyNetworkError("no snapshot_<t>.edges files in " + dir.string());
  DynamicNetwork net;
  int expected = 1;
  for (const auto& [t, path] : files) {
    if (t != expected) throw ParseError(dir.string(), 0, "snapshot " + std::to_string(expected) + " is missing");
    ++expected;
    auto in = open_input(path);
    std::vector<Edge> edges;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
      const auto fields = split_fields(line);
      if (skip_line(fields)) continue;
      if (fields.size() != 2) throw ParseError(path.string(), line_no, "expected `src dst`");
      edges.emplace_back(net.symbols.intern(fields[0]), net.symbols.intern(fields[1]));
    }
    net.snapshots.push_back(SnapshotGraph::from_edges(t, std::move(edges)));
  }
  return net;
}

void write_snapshot_dir(const DynamicNetwork& net, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& g : net.snapshots) {
    auto out = open_output(dir / snapshot_file_name(g.timestep()));
    for (const auto& [u, v] : g.edges()) out << net.symbols.label(u) << ' ' << net.symbols.label(v) << '\n';
  }
}

GroundTruth read_ground_truth(const fs::path& path, SymbolTable& symbols, std::size_t timesteps) {
  GroundTruth truth;
  if (fs::is_directory(path)) {
    const auto files = numbered_files(path, "truth_", ".txt");
    for (std::size_t t = 1; t <= timesteps; ++t) {
      auto it = files.find(static_cast<int>(t));
      if (it == files.end()) throw ParseError(path.string(), 0, "missing " + truth_file_name(static_cast<int>(t)).string());
      truth.steps.push_back(read_truth_file(it->second, symbols));
    }
    return truth;
  }
  truth.steps.assign(timesteps, read_truth_file(path, symbols));
  return truth;
}

void write_ground_truth_dir(const GroundTruth& truth, const SymbolTable& symbols, const fs::path& dir) {
  fs::create_directories(dir);
  for (std::size_t k = 0; k < truth.steps.size(); ++k) {
    auto out = open_output(dir / truth_file_name(static_cast<int>(k + 1)));
    for (const auto& [v, label] : truth.steps[k].entries()) out << symbols.label(v) << ' ' << label << '\n';
  }
}

}  // namespace leadtrack
