#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leadtrack/benchgen.hpp"

namespace leadtrack::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct SliceOptions {
  std::filesystem::path input;
  std::int64_t window = 0;
  std::filesystem::path out;
};

struct GenerateOptions {
  std::string kind;  // "kawadia" or "events"
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;  // overrides the config's seed
  std::filesystem::path out;
};

struct DetectOptions {
  std::filesystem::path input;          // snapshot directory, or an edge stream with `window`
  std::optional<std::int64_t> window;
  std::uint64_t seed = 0;
  unsigned threads = 0;                 // 0: hardware concurrency
  std::filesystem::path out;
};

struct EvalOptions {
  std::vector<std::filesystem::path> partitions;
  std::optional<std::filesystem::path> truth;
  std::filesystem::path out;
};

// Each command writes into a fresh (missing or empty) output directory and
// throws on any failure.
void cmd_slice(const SliceOptions& opts);
void cmd_generate(const GenerateOptions& opts);
void cmd_detect(const DetectOptions& opts);
void cmd_baseline(const DetectOptions& opts);
void cmd_eval(const EvalOptions& opts);

/// Missing keys keep their defaults; unknown keys are a ConfigError.
KawadiaConfig kawadia_from_json(const nlohmann::json& j);
EventBenchConfig events_from_json(const nlohmann::json& j);

}  // namespace leadtrack::cli
