#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>

#include "leadtrack/errors.hpp"
#include "leadtrack/io.hpp"
#include "leadtrack/metrics.hpp"
#include "leadtrack/pipeline.hpp"
#include "leadtrack/serialize.hpp"

namespace leadtrack::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void prepare_output_dir(const fs::path& out) {
  if (out.empty()) throw ConfigError("an output directory is required");
  if (fs::exists(out)) {
    if (!fs::is_directory(out)) throw ConfigError(out.string() + " exists and is not a directory");
    if (!fs::is_empty(out)) throw ConfigError("output directory " + out.string() + " is not empty");
  }
  fs::create_directories(out);
}

std::ofstream create_file(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
  auto out = create_file(path);
  writer(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_manifest(const fs::path& out, json manifest) {
  manifest["tool"] = "leadtrack";
  manifest["version"] = kToolVersion;
  write_file(out / "manifest.json", [&](std::ostream& os) { os << manifest.dump(1) << '\n'; });
}

DynamicNetwork load_network(const DetectOptions& opts) {
  if (fs::is_directory(opts.input)) return read_snapshot_dir(opts.input);
  if (!opts.window) throw ConfigError("--window is required when the input is an edge stream file");
  return ingest_edge_stream(read_edge_stream_file(opts.input), *opts.window);
}

json input_manifest(const DetectOptions& opts) {
  json j{{"input", opts.input.string()}, {"seed", opts.seed}};
  if (opts.window) j["window"] = *opts.window;
  return j;
}

void write_timing(const fs::path& path, std::span<const double> seconds) {
  auto out = create_file(path);
  out << "t,seconds\n" << std::setprecision(9);
  for (std::size_t k = 0; k < seconds.size(); ++k) out << k + 1 << ',' << seconds[k] << '\n';
  out << "total," << std::accumulate(seconds.begin(), seconds.end(), 0.0) << '\n';
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (std::find_if(known.begin(), known.end(), [&](const char* k) { return key == k; }) == known.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

template <class T>
void read_key(const json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void write_series(std::ostream& out, std::string_view metric, const std::vector<SeriesPoint>& series) {
  for (const auto& pt : series) {
    out << pt.t << ',' << metric << ',';
    if (pt.value) out << *pt.value;
    out << ',' << pt.universe_size << '\n';
  }
}

}  // namespace

KawadiaConfig kawadia_from_json(const json& j) {
  reject_unknown_keys(j, {"nodes", "communities", "p_r", "p_c", "p", "timesteps", "seed"});
  KawadiaConfig cfg;
  read_key(j, "nodes", cfg.nodes);
  read_key(j, "communities", cfg.communities);
  read_key(j, "p_r", cfg.background_p);
  read_key(j, "p_c", cfg.intra_p);
  read_key(j, "p", cfg.death_p);
  read_key(j, "timesteps", cfg.timesteps);
  read_key(j, "seed", cfg.seed);
  return cfg;
}

EventBenchConfig events_from_json(const json& j) {
  reject_unknown_keys(
      j, {"communities", "min_size", "max_size", "size_exponent", "floaters", "p_in", "p_out", "activity_exponent",
          "timesteps", "event", "intermittent_fraction", "expand_contract_count", "expand_contract_fraction",
          "birth_count", "death_count", "merge_count", "split_count", "seed"});
  EventBenchConfig cfg;
  read_key(j, "communities", cfg.communities);
  read_key(j, "min_size", cfg.min_size);
  read_key(j, "max_size", cfg.max_size);
  read_key(j, "size_exponent", cfg.size_exponent);
  read_key(j, "floaters", cfg.floaters);
  read_key(j, "p_in", cfg.p_in);
  read_key(j, "p_out", cfg.p_out);
  read_key(j, "activity_exponent", cfg.activity_exponent);
  read_key(j, "timesteps", cfg.timesteps);
  if (j.contains("event")) cfg.event = parse_bench_event(j.at("event").get<std::string>());
  read_key(j, "intermittent_fraction", cfg.intermittent_fraction);
  read_key(j, "expand_contract_count", cfg.expand_contract_count);
  read_key(j, "expand_contract_fraction", cfg.expand_contract_fraction);
  read_key(j, "birth_count", cfg.birth_count);
  read_key(j, "death_count", cfg.death_count);
  read_key(j, "merge_count", cfg.merge_count);
  read_key(j, "split_count", cfg.split_count);
  read_key(j, "seed", cfg.seed);
  return cfg;
}

void cmd_slice(const SliceOptions& opts) {
  if (opts.window <= 0) throw ConfigError("--window must be a positive integer");
  const auto records = read_edge_stream_file(opts.input);
  IngestStats stats;
  const auto net = ingest_edge_stream(records, opts.window, &stats);
  prepare_output_dir(opts.out);
  write_snapshot_dir(net, opts.out);
  write_manifest(opts.out, {{"command", "slice"},
                            {"input", opts.input.string()},
                            {"window", opts.window},
                            {"records", records.size()},
                            {"snapshots", net.length()},
                            {"nodes", net.symbols.size()},
                            {"self_loops_dropped", stats.self_loops_dropped},
                            {"duplicate_edges_collapsed", stats.duplicate_edges_collapsed}});
}

void cmd_generate(const GenerateOptions& opts) {
  json config = json::object();
  if (opts.config) {
    std::ifstream in(*opts.config);
    if (!in) throw std::runtime_error("cannot open " + opts.config->string());
    try {
      config = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(opts.config->string() + ": " + e.what());
    }
  }
  if (opts.seed) config["seed"] = *opts.seed;

  Benchmark bench;
  json resolved;
  if (opts.kind == "kawadia") {
    const auto cfg = kawadia_from_json(config);
    bench = generate_kawadia(cfg);
    resolved = {{"nodes", cfg.nodes}, {"communities", cfg.communities}, {"p_r", cfg.background_p},
                {"p_c", cfg.intra_p}, {"p", cfg.death_p},         {"q", cfg.birth_p()},
                {"timesteps", cfg.timesteps}, {"seed", cfg.seed}};
  } else if (opts.kind == "events") {
    const auto cfg = events_from_json(config);
    bench = generate_events(cfg);
    resolved = config;
    resolved["event"] = std::string(to_string(cfg.event));
    resolved["seed"] = cfg.seed;
  } else {
    throw ConfigError("unknown generator '" + opts.kind + "' (expected kawadia or events)");
  }

  prepare_output_dir(opts.out);
  write_snapshot_dir(bench.network, opts.out);
  write_ground_truth_dir(bench.truth, bench.network.symbols, opts.out);
  std::size_t skipped = 0;
  for (const auto& tally : bench.tallies) skipped += tally.skipped;
  write_manifest(opts.out, {{"command", "generate"},
                            {"kind", opts.kind},
                            {"config", resolved},
                            {"snapshots", bench.network.length()},
                            {"community_counts", bench.community_counts},
                            {"skipped_events", skipped}});
}

void cmd_detect(const DetectOptions& opts) {
  const auto net = load_network(opts);
  prepare_output_dir(opts.out);
  DetectorOptions detector;
  detector.seed = opts.seed;
  detector.threads = opts.threads;
  const auto result = run(net, detector);

  write_file(opts.out / "partitions.txt",
             [&](std::ostream& out) { write_partitions_text(out, result.partitions, result.events, net.symbols); });
  write_file(opts.out / "partitions.json",
             [&](std::ostream& out) { write_partitions_json(out, result.partitions, result.events, net.symbols); });
  write_file(opts.out / "timelines.json",
             [&](std::ostream& out) { write_timelines_json(out, result.timelines, net.symbols); });
  write_timing(opts.out / "timing.csv", result.step_seconds);
  auto manifest = input_manifest(opts);
  manifest["command"] = "detect";
  manifest["threads"] = opts.threads;
  manifest["snapshots"] = net.length();
  write_manifest(opts.out, manifest);
}

void cmd_baseline(const DetectOptions& opts) {
  const auto net = load_network(opts);
  prepare_output_dir(opts.out);
  std::vector<double> seconds;
  const auto partitions = run_static_baseline(net, opts.seed, &seconds);
  std::vector<LifecycleEvent> events;
  for (const auto& p : partitions) {
    for (const auto& c : p.communities) events.push_back({p.t, c.id, EventKind::Born});
  }
  write_file(opts.out / "partitions.txt",
             [&](std::ostream& out) { write_partitions_text(out, partitions, events, net.symbols); });
  write_file(opts.out / "partitions.json",
             [&](std::ostream& out) { write_partitions_json(out, partitions, events, net.symbols); });
  write_timing(opts.out / "timing.csv", seconds);
  auto manifest = input_manifest(opts);
  manifest["command"] = "baseline";
  manifest["snapshots"] = net.length();
  write_manifest(opts.out, manifest);
}

void cmd_eval(const EvalOptions& opts) {
  if (opts.partitions.empty()) throw ConfigError("eval needs at least one partitions file");
  prepare_output_dir(opts.out);
  json outputs = json::array();
  for (std::size_t k = 0; k < opts.partitions.size(); ++k) {
    const auto& path = opts.partitions[k];
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    SymbolTable symbols;
    const auto partitions = read_partitions_text(in, symbols, path.string());
    std::optional<GroundTruth> truth;
    if (opts.truth) truth = read_ground_truth(*opts.truth, symbols, partitions.size());

    const fs::path csv_name =
        opts.partitions.size() == 1 ? fs::path("metrics.csv") : fs::path("metrics_" + std::to_string(k + 1) + ".csv");
    auto csv = create_file(opts.out / csv_name);
    csv << "t,metric,value,universe_size\n" << std::setprecision(12);
    if (partitions.size() >= 2) write_series(csv, "smoothness", smoothness_series(partitions));
    if (truth) write_series(csv, "ground_truth", ground_truth_series(partitions, *truth));
    for (const auto& pt : persistence_series(partitions)) {
      csv << pt.t << ",leader_persistence,";
      if (pt.leader) csv << *pt.leader;
      csv << ',' << pt.leader_count << '\n';
      csv << pt.t << ",follower_persistence,";
      if (pt.follower) csv << *pt.follower;
      csv << ',' << pt.follower_count << '\n';
    }
    outputs.push_back({{"partitions", path.string()}, {"metrics", csv_name.string()}});
  }
  json manifest{{"command", "eval"}, {"outputs", outputs}, {"nmi_normalization", "arithmetic"}};
  if (opts.truth) manifest["truth"] = opts.truth->string();
  write_manifest(opts.out, manifest);
}

}  // namespace leadtrack::cli
