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

#ifndef FTCOMP_CLI_HPP_
#define FTCOMP_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ftcomp/errors.hpp"
#include "ftcomp/io.hpp"

namespace ftcomp
{

/// A request the CLI cannot act on (conflicting or missing arguments).
class UsageError : public Error
{
public:
  using Error::Error;
};

/// Command-line values. Unset optionals fall back to the config file (when
/// given) and then to defaults; the config file is the only override source
/// besides flags, environment variables are never consulted.
struct CliOptions
{
  std::string config_path;
  std::string scenario;
  std::string input_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> omega_deg_s;
  std::optional<double> live_rate;
  std::optional<std::size_t> eval_start;
  std::string samples_path;  // metrics subcommand
  std::string outputs_path;  // metrics subcommand
};

/// Exit codes shared by the CLI and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitNumerical = 4;

/// Writes samples.csv and truth.json for a scenario into the output
/// directory.
void cmd_simulate(const CliOptions & options, std::ostream & log);

/// Runs the estimation cascade over a scenario or an input CSV and writes
/// outputs.csv, params.json, and metrics.json (plus truth.json when the
/// samples come from a scenario).
void cmd_run(const CliOptions & options, std::ostream & log);

/// Same numerical behavior and artifacts as cmd_run, but paces delivery by
/// the sample timestamps (live_rate 0 disables pacing) and reports the mean
/// and worst-case per-sample processing latency.
void cmd_replay(const CliOptions & options, std::ostream & log);

/// Recomputes the before/after error report from a samples CSV and an
/// outputs CSV.
void cmd_metrics(const CliOptions & options, std::ostream & log);

/// Maps an exception to the CLI exit-code contract.
int exit_code_for_current_exception();

}  // namespace ftcomp

#endif  // FTCOMP_CLI_HPP_
