// Copyright 2026 ftcomp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include <CLI11.hpp>

#include "ftcomp/cli.hpp"

namespace
{

void add_common_flags(CLI::App * cmd, ftcomp::CliOptions & options)
{
  cmd->add_option("--config", options.config_path, "JSON run configuration file");
  cmd->add_option("--out", options.out_dir, "output directory");
  cmd->add_option("--seed", options.seed, "random seed");
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"online non-contact wrench identification and compensation testbed"};
  app.require_subcommand(1);

  ftcomp::CliOptions options;

  CLI::App * simulate = app.add_subcommand(
    "simulate", "generate a scenario sample stream (samples.csv + truth.json)");
  add_common_flags(simulate, options);
  simulate->add_option("--scenario", options.scenario, "scenario preset name");
  simulate->add_option("--omega", options.omega_deg_s, "rotation_sweep angular velocity, deg/s");

  CLI::App * run = app.add_subcommand(
    "run", "run the compensation cascade over a scenario or a samples CSV");
  add_common_flags(run, options);
  run->add_option("--scenario", options.scenario, "scenario preset name");
  run->add_option("--input", options.input_path, "samples CSV path");
  run->add_option("--omega", options.omega_deg_s, "rotation_sweep angular velocity, deg/s");
  run->add_option("--eval-start", options.eval_start, "first sample of the metrics window");

  CLI::App * replay = app.add_subcommand(
    "replay", "run a samples CSV paced by its timestamps and report step latency");
  add_common_flags(replay, options);
  replay->add_option("--input", options.input_path, "samples CSV path");
  replay->add_option("--live-rate", options.live_rate,
    "pacing factor: 1 = real time, 0 = fast-forward");
  replay->add_option("--eval-start", options.eval_start, "first sample of the metrics window");

  CLI::App * metrics = app.add_subcommand(
    "metrics", "recompute the before/after error report from CSV logs");
  add_common_flags(metrics, options);
  metrics->add_option("--samples", options.samples_path, "samples CSV path");
  metrics->add_option("--outputs", options.outputs_path, "outputs CSV path");
  metrics->add_option("--eval-start", options.eval_start, "first sample of the metrics window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return ftcomp::kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      ftcomp::cmd_simulate(options, std::cout);
    } else if (run->parsed()) {
      ftcomp::cmd_run(options, std::cout);
    } else if (replay->parsed()) {
      ftcomp::cmd_replay(options, std::cout);
    } else if (metrics->parsed()) {
      ftcomp::cmd_metrics(options, std::cout);
    }
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return ftcomp::exit_code_for_current_exception();
  }
  return ftcomp::kExitOk;
}
