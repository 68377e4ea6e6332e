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

#ifndef FTCOMP_IO_HPP_
#define FTCOMP_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftcomp/metrics.hpp"
#include "ftcomp/pipeline.hpp"
#include "ftcomp/simulator.hpp"

namespace ftcomp
{

/// 17 significant digits: enough for an exact double round trip through text.
std::string format_double(double value);

// Sample streams are logged as CSV with one row per sample:
// t, force (3), torque (3), and the end-to-base rotation row-major (9).
inline constexpr const char * kSamplesCsvHeader =
  "t,fx,fy,fz,tx,ty,tz,r11,r12,r13,r21,r22,r23,r31,r32,r33";

void write_samples_csv(std::ostream & out, std::span<const SensorSample> samples);
std::string samples_to_csv(std::span<const SensorSample> samples);
void write_samples_csv_file(const std::filesystem::path & path, std::span<const SensorSample> samples);

/// Parses a sample CSV. Malformed rows raise ParseError naming the line;
/// rotation blocks are strictly validated.
std::vector<SensorSample> read_samples_csv(std::istream & in);
std::vector<SensorSample> read_samples_csv_file(const std::filesystem::path & path);

// Per-sample pipeline results: contact wrench plus the detector/stage flags.
inline constexpr const char * kOutputsCsvHeader =
  "t,fcx,fcy,fcz,tcx,tcy,tcz,"
  "force_converged,torque_converged,in_contact_force,in_contact_torque,torque_active";

/// One parsed row of an outputs CSV.
struct OutputRecord
{
  double t = 0.0;
  Vec3 f_contact = Vec3::Zero();
  Vec3 t_contact = Vec3::Zero();
  bool force_converged = false;
  bool torque_converged = false;
  bool in_contact_force = false;
  bool in_contact_torque = false;
  bool torque_active = false;
};

void write_outputs_csv(
  std::ostream & out, std::span<const SensorSample> samples,
  std::span<const PipelineOutput> outputs);
std::vector<OutputRecord> read_outputs_csv(std::istream & in);
std::vector<OutputRecord> read_outputs_csv_file(const std::filesystem::path & path);

/// Ground-truth sidecar written next to simulated sample logs, so checks
/// against the truth never hard-code values in two places.
nlohmann::json truth_to_json(const Scenario & scenario);

/// Reads "eval_start" from a truth sidecar if present.
std::optional<std::size_t> eval_start_from_truth_json(const nlohmann::json & truth);

nlohmann::json params_to_json(const PipelineRunResult & result);

/// Before/after error report over an evaluation window.
struct Report
{
  std::size_t eval_start = 0;
  std::size_t eval_count = 0;
  std::vector<ComparisonRow> rows;
  std::array<double, 6> bounds_after{};
};

Report build_report(
  std::span<const SensorSample> samples, std::span<const PipelineOutput> outputs,
  std::size_t eval_start);
Report build_report(
  std::span<const SensorSample> samples, std::span<const OutputRecord> outputs,
  std::size_t eval_start);

nlohmann::json report_to_json(const Report & report);

/// Renders the report as a fixed-width text table.
std::string report_to_text(const Report & report);

/// Run configuration file. Every key is optional; unknown keys are rejected.
/// Command-line flags override file values.
struct RunConfig
{
  std::uint64_t seed = 42;
  PipelineConfig pipeline{};
  std::string scenario;
  std::string input_path;
  std::string out_dir = ".";
  std::optional<double> omega_deg_s;
  double live_rate = 1.0;
  std::optional<std::size_t> eval_start;
};

RunConfig run_config_from_json(const nlohmann::json & j);
RunConfig read_run_config_file(const std::filesystem::path & path);

void write_text_file(const std::filesystem::path & path, const std::string & content);
std::string read_text_file(const std::filesystem::path & path);
void write_json_file(const std::filesystem::path & path, const nlohmann::json & j);
nlohmann::json read_json_file(const std::filesystem::path & path);

}  // namespace ftcomp

#endif  // FTCOMP_IO_HPP_
