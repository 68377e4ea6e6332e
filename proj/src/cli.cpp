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

#include "ftcomp/cli.hpp"

#include <chrono>
#include <fstream>
#include <thread>

namespace ftcomp
{

namespace
{

namespace fs = std::filesystem;

RunConfig resolve_config(const CliOptions & options)
{
  RunConfig config;
  if (!options.config_path.empty()) {
    config = read_run_config_file(options.config_path);
  }
  if (options.seed) {
    config.seed = *options.seed;
  }
  if (!options.scenario.empty()) {
    config.scenario = options.scenario;
  }
  if (!options.input_path.empty()) {
    config.input_path = options.input_path;
  }
  if (!options.out_dir.empty()) {
    config.out_dir = options.out_dir;
  }
  if (options.omega_deg_s) {
    config.omega_deg_s = *options.omega_deg_s;
  }
  if (options.live_rate) {
    config.live_rate = *options.live_rate;
  }
  if (options.eval_start) {
    config.eval_start = *options.eval_start;
  }
  return config;
}

Scenario make_scenario(const RunConfig & config)
{
  Scenario scenario = config.scenario == "rotation_sweep" && config.omega_deg_s ?
    rotation_sweep_scenario(*config.omega_deg_s) :
    scenario_preset(config.scenario);
  scenario.seed = config.seed;
  return scenario;
}

fs::path prepare_out_dir(const RunConfig & config)
{
  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " + dir.string());
  }
  return dir;
}

struct LoadedStream
{
  std::vector<SensorSample> samples;
  std::optional<Scenario> scenario;          // set when samples are simulated
  std::optional<std::size_t> eval_start_hint;
};

LoadedStream load_stream(const RunConfig & config)
{
  const bool has_scenario = !config.scenario.empty();
  const bool has_input = !config.input_path.empty();
  if (has_scenario == has_input) {
    throw UsageError("exactly one of --scenario and --input is required");
  }
  LoadedStream stream;
  if (has_scenario) {
    stream.scenario = make_scenario(config);
    stream.samples = scenario_samples(*stream.scenario);
    stream.eval_start_hint = stream.scenario->eval_start;
  } else {
    stream.samples = read_samples_csv_file(config.input_path);
    // A truth sidecar next to the input names the evaluation window.
    const fs::path sidecar = fs::path(config.input_path).parent_path() / "truth.json";
    std::error_code ec;
    if (fs::exists(sidecar, ec)) {
      stream.eval_start_hint = eval_start_from_truth_json(read_json_file(sidecar));
    }
  }
  return stream;
}

std::size_t resolve_eval_start(
  const RunConfig & config, const LoadedStream & stream, const PipelineRunResult & result)
{
  if (config.eval_start) {
    return *config.eval_start;
  }
  if (stream.eval_start_hint) {
    return *stream.eval_start_hint;
  }
  // Fall back to the first sample with both stages converged: the window
  // where the compensation error is meaningful.
  if (result.torque_converged_after > 0) {
    return static_cast<std::size_t>(result.torque_converged_after - 1);
  }
  return 0;
}

struct StepTiming
{
  double mean_us = 0.0;
  double worst_us = 0.0;
};

PipelineRunResult run_stream(
  const RunConfig & config, std::span<const SensorSample> samples, bool paced,
  StepTiming & timing)
{
  if (samples.empty()) {
    throw EmptyInput("no samples to process");
  }
  using clock = std::chrono::steady_clock;
  Pipeline pipeline(config.pipeline, config.seed);
  PipelineRunResult result;
  result.outputs.reserve(samples.size());

  const auto wall_start = clock::now();
  const double t0 = samples.front().t;
  double total_us = 0.0;
  std::int64_t index = 0;
  for (const SensorSample & sample : samples) {
    if (paced && config.live_rate > 0.0) {
      const auto target = wall_start +
        std::chrono::duration_cast<clock::duration>(
        std::chrono::duration<double>((sample.t - t0) / config.live_rate));
      std::this_thread::sleep_until(target);
    }
    const auto before = clock::now();
    result.outputs.push_back(pipeline.step(sample));
    const auto after = clock::now();
    const double us = std::chrono::duration<double, std::micro>(after - before).count();
    total_us += us;
    timing.worst_us = std::max(timing.worst_us, us);
    ++index;
    if (result.force_converged_after < 0 && result.outputs.back().force_converged) {
      result.force_converged_after = index;
    }
    if (result.torque_converged_after < 0 && result.outputs.back().torque_converged) {
      result.torque_converged_after = index;
    }
  }
  timing.mean_us = total_us / static_cast<double>(samples.size());
  result.params = pipeline.params();
  return result;
}

void run_and_write(
  const CliOptions & options, std::ostream & log, bool paced)
{
  const RunConfig config = resolve_config(options);
  const LoadedStream stream = load_stream(config);
  const fs::path dir = prepare_out_dir(config);

  StepTiming timing;
  const PipelineRunResult result = run_stream(config, stream.samples, paced, timing);
  const std::size_t eval_start = resolve_eval_start(config, stream, result);
  const Report report = build_report(
    std::span<const SensorSample>(stream.samples), std::span<const PipelineOutput>(result.outputs),
    eval_start);

  if (stream.scenario) {
    write_json_file(dir / "truth.json", truth_to_json(*stream.scenario));
  }
  {
    std::ofstream out(dir / "outputs.csv");
    if (!out) {
      throw IoError("cannot open for writing: " + (dir / "outputs.csv").string());
    }
    write_outputs_csv(out, stream.samples, result.outputs);
  }
  write_json_file(dir / "params.json", params_to_json(result));
  write_json_file(dir / "metrics.json", report_to_json(report));

  log << "processed " << stream.samples.size() << " samples\n";
  if (result.force_converged_after >= 0) {
    log << "force stage converged after " << result.force_converged_after << " samples\n";
  } else {
    log << "force stage did not converge\n";
  }
  if (result.torque_converged_after >= 0) {
    log << "torque stage converged after " << result.torque_converged_after << " samples\n";
  } else {
    log << "torque stage did not converge\n";
  }
  log << report_to_text(report);
  if (paced) {
    char buf[96];
    std::snprintf(
      buf, sizeof(buf), "step latency: mean %.3f us, worst %.3f us\n",
      timing.mean_us, timing.worst_us);
    log << buf;
  }
  log << "wrote " << (dir / "outputs.csv").string() << ", params.json, metrics.json\n";
}

}  // namespace

void cmd_simulate(const CliOptions & options, std::ostream & log)
{
  const RunConfig config = resolve_config(options);
  if (config.scenario.empty()) {
    throw UsageError("--scenario is required");
  }
  const Scenario scenario = make_scenario(config);
  const auto samples = scenario_samples(scenario);
  const fs::path dir = prepare_out_dir(config);
  write_samples_csv_file(dir / "samples.csv", samples);
  write_json_file(dir / "truth.json", truth_to_json(scenario));
  log << "scenario '" << scenario.name << "', seed " << scenario.seed << ": wrote "
      << samples.size() << " samples to " << (dir / "samples.csv").string() << "\n";
}

void cmd_run(const CliOptions & options, std::ostream & log)
{
  run_and_write(options, log, /*paced=*/false);
}

void cmd_replay(const CliOptions & options, std::ostream & log)
{
  run_and_write(options, log, /*paced=*/true);
}

void cmd_metrics(const CliOptions & options, std::ostream & log)
{
  if (options.samples_path.empty() || options.outputs_path.empty()) {
    throw UsageError("--samples and --outputs are required");
  }
  const RunConfig config = resolve_config(options);
  const auto samples = read_samples_csv_file(options.samples_path);
  const auto outputs = read_outputs_csv_file(options.outputs_path);

  std::size_t eval_start = 0;
  if (config.eval_start) {
    eval_start = *config.eval_start;
  } else {
    const fs::path sidecar = fs::path(options.samples_path).parent_path() / "truth.json";
    std::error_code ec;
    if (fs::exists(sidecar, ec)) {
      eval_start = eval_start_from_truth_json(read_json_file(sidecar)).value_or(0);
    }
  }

  const Report report = build_report(
    std::span<const SensorSample>(samples), std::span<const OutputRecord>(outputs), eval_start);
  const fs::path dir = prepare_out_dir(config);
  write_json_file(dir / "metrics.json", report_to_json(report));
  log << report_to_text(report);
  log << "wrote " << (dir / "metrics.json").string() << "\n";
}

int exit_code_for_current_exception()
{
  try {
    throw;
  } catch (const UsageError &) {
    return kExitUsage;
  } catch (const UnknownScenario &) {
    return kExitUsage;
  } catch (const ParseError &) {
    return kExitParse;
  } catch (const IoError &) {
    return kExitParse;
  } catch (const EmptyInput &) {
    return kExitParse;
  } catch (const Error &) {
    // NonMonotonicTime, SingularInnovation, RankDeficient, NotARotation,
    // EventOutOfRange: numerical contract violations.
    return kExitNumerical;
  } catch (...) {
    return kExitNumerical;
  }
}

}  // namespace ftcomp
