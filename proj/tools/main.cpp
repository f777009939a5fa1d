#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace leadtrack::cli;
  CLI::App app{"leadtrack: leader-based community tracking in dynamic networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  SliceOptions slice;
  auto* slice_cmd = app.add_subcommand("slice", "Slice a timestamped edge stream into snapshot files");
  slice_cmd->add_option("input", slice.input, "Edge stream (src dst timestamp per line)")->required();
  slice_cmd->add_option("--window", slice.window, "Window width in timestamp units")->required();
  slice_cmd->add_option("--out", slice.out, "Output directory")->required();

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a synthetic benchmark with ground truth");
  gen_cmd->add_option("kind", gen.kind, "kawadia or events")->required();
  gen_cmd->add_option("--config", gen.config, "JSON configuration file");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (overrides the config)");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  DetectOptions detect;
  auto* detect_cmd = app.add_subcommand("detect", "Run incremental leader-based detection");
  DetectOptions baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Cluster every snapshot independently");
  for (auto [cmd, opts] : {std::pair{detect_cmd, &detect}, std::pair{baseline_cmd, &baseline}}) {
    cmd->add_option("input", opts->input, "Snapshot directory or edge stream file")->required();
    cmd->add_option("--window", opts->window, "Window width when the input is an edge stream");
    cmd->add_option("--seed", opts->seed, "RNG seed");
    cmd->add_option("--out", opts->out, "Output directory")->required();
  }
  detect_cmd->add_option("--threads", detect.threads, "Expansion worker threads (0 = all cores)");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compute smoothness, ground-truth and persistence series");
  eval_cmd->add_option("partitions", eval.partitions, "Partition files written by detect or baseline")->required();
  eval_cmd->add_option("--truth", eval.truth, "Ground-truth directory or file");
  eval_cmd->add_option("--out", eval.out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*slice_cmd) cmd_slice(slice);
    if (*gen_cmd) cmd_generate(gen);
    if (*detect_cmd) cmd_detect(detect);
    if (*baseline_cmd) cmd_baseline(baseline);
    if (*eval_cmd) cmd_eval(eval);
  } catch (const std::exception& e) {
    std::cerr << "leadtrack: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
