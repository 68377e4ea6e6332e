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

#include "ftcomp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ftcomp/errors.hpp"

namespace ftcomp
{

namespace
{

std::vector<std::string_view> split_fields(std::string_view line)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_finite_double(std::string_view field, std::size_t line)
{
  double value = 0.0;
  const char * first = field.data();
  const char * last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParseError(line, "cannot parse number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite value: '" + std::string(field) + "'");
  }
  return value;
}

bool parse_flag(std::string_view field, std::size_t line)
{
  if (field == "0") {
    return false;
  }
  if (field == "1") {
    return true;
  }
  throw ParseError(line, "flag must be 0 or 1, got '" + std::string(field) + "'");
}

void append_double(std::string & out, double value)
{
  char buf[32];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  out.append(buf, static_cast<std::size_t>(n));
}

nlohmann::json vec3_to_json(const Vec3 & v)
{
  return nlohmann::json::array({v.x(), v.y(), v.z()});
}

nlohmann::json mat3_to_json(const Mat3 & m)
{
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      j.push_back(m(r, c));
    }
  }
  return j;
}

void reject_unknown_keys(
  const nlohmann::json & j, std::initializer_list<const char *> known, const char * context)
{
  for (const auto & item : j.items()) {
    bool found = false;
    for (const char * key : known) {
      if (item.key() == key) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw ParseError(std::string("unknown key '") + item.key() + "' in " + context);
    }
  }
}

RlsConfig rls_config_from_json(const nlohmann::json & j, const char * context)
{
  reject_unknown_keys(
    j, {"p0_scale", "r_noise_scale", "epsilon", "min_samples", "consecutive_required"}, context);
  RlsConfig config;
  config.p0_scale = j.value("p0_scale", config.p0_scale);
  config.r_noise_scale = j.value("r_noise_scale", config.r_noise_scale);
  config.epsilon = j.value("epsilon", config.epsilon);
  config.min_samples = j.value("min_samples", config.min_samples);
  config.consecutive_required = j.value("consecutive_required", config.consecutive_required);
  return config;
}

}  // namespace

std::string format_double(double value)
{
  std::string out;
  append_double(out, value);
  return out;
}

void write_samples_csv(std::ostream & out, std::span<const SensorSample> samples)
{
  out << kSamplesCsvHeader << '\n';
  std::string line;
  for (const SensorSample & sample : samples) {
    line.clear();
    append_double(line, sample.t);
    for (int i = 0; i < 3; ++i) {
      line.push_back(',');
      append_double(line, sample.wrench.force(i));
    }
    for (int i = 0; i < 3; ++i) {
      line.push_back(',');
      append_double(line, sample.wrench.torque(i));
    }
    const Mat3 & r = sample.r_eb.matrix();
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        line.push_back(',');
        append_double(line, r(row, col));
      }
    }
    line.push_back('\n');
    out << line;
  }
}

std::string samples_to_csv(std::span<const SensorSample> samples)
{
  std::ostringstream out;
  write_samples_csv(out, samples);
  return out.str();
}

void write_samples_csv_file(
  const std::filesystem::path & path, std::span<const SensorSample> samples)
{
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  write_samples_csv(out, samples);
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::vector<SensorSample> read_samples_csv(std::istream & in)
{
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(std::size_t{1}, "missing header row");
  }
  if (line != kSamplesCsvHeader) {
    throw ParseError(std::size_t{1}, "unexpected header, want '" + std::string(kSamplesCsvHeader) + "'");
  }
  std::vector<SensorSample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 16) {
      throw ParseError(
        line_no, "expected 16 fields, got " + std::to_string(fields.size()));
    }
    SensorSample sample;
    sample.t = parse_finite_double(fields[0], line_no);
    for (int i = 0; i < 3; ++i) {
      sample.wrench.force(i) = parse_finite_double(fields[1 + static_cast<std::size_t>(i)], line_no);
    }
    for (int i = 0; i < 3; ++i) {
      sample.wrench.torque(i) = parse_finite_double(fields[4 + static_cast<std::size_t>(i)], line_no);
    }
    Mat3 r;
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        r(row, col) =
          parse_finite_double(fields[7 + static_cast<std::size_t>(3 * row + col)], line_no);
      }
    }
    try {
      sample.r_eb = validate_rotation(r, ValidationMode::Strict);
    } catch (const NotARotation & e) {
      throw ParseError(line_no, std::string("rotation check failed: ") + e.what());
    }
    samples.push_back(sample);
  }
  return samples;
}

std::vector<SensorSample> read_samples_csv_file(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open: " + path.string());
  }
  return read_samples_csv(in);
}

void write_outputs_csv(
  std::ostream & out, std::span<const SensorSample> samples,
  std::span<const PipelineOutput> outputs)
{
  out << kOutputsCsvHeader << '\n';
  std::string line;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    line.clear();
    append_double(line, samples[i].t);
    for (int k = 0; k < 3; ++k) {
      line.push_back(',');
      append_double(line, outputs[i].f_contact(k));
    }
    for (int k = 0; k < 3; ++k) {
      line.push_back(',');
      append_double(line, outputs[i].t_contact(k));
    }
    for (bool flag : {outputs[i].force_converged, outputs[i].torque_converged,
        outputs[i].in_contact_force, outputs[i].in_contact_torque, outputs[i].torque_active})
    {
      line.push_back(',');
      line.push_back(flag ? '1' : '0');
    }
    line.push_back('\n');
    out << line;
  }
}

std::vector<OutputRecord> read_outputs_csv(std::istream & in)
{
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(std::size_t{1}, "missing header row");
  }
  if (line != kOutputsCsvHeader) {
    throw ParseError(std::size_t{1}, "unexpected header, want '" + std::string(kOutputsCsvHeader) + "'");
  }
  std::vector<OutputRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 12) {
      throw ParseError(
        line_no, "expected 12 fields, got " + std::to_string(fields.size()));
    }
    OutputRecord record;
    record.t = parse_finite_double(fields[0], line_no);
    for (int i = 0; i < 3; ++i) {
      record.f_contact(i) = parse_finite_double(fields[1 + static_cast<std::size_t>(i)], line_no);
    }
    for (int i = 0; i < 3; ++i) {
      record.t_contact(i) = parse_finite_double(fields[4 + static_cast<std::size_t>(i)], line_no);
    }
    record.force_converged = parse_flag(fields[7], line_no);
    record.torque_converged = parse_flag(fields[8], line_no);
    record.in_contact_force = parse_flag(fields[9], line_no);
    record.in_contact_torque = parse_flag(fields[10], line_no);
    record.torque_active = parse_flag(fields[11], line_no);
    records.push_back(record);
  }
  return records;
}

std::vector<OutputRecord> read_outputs_csv_file(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open: " + path.string());
  }
  return read_outputs_csv(in);
}

nlohmann::json truth_to_json(const Scenario & scenario)
{
  std::size_t total = 0;
  for (const TrajectorySpec & segment : scenario.segments) {
    total += segment.sample_count;
  }
  nlohmann::json j;
  j["scenario"] = scenario.name;
  j["description"] = scenario.description;
  j["seed"] = scenario.seed;
  j["eval_start"] = scenario.eval_start;
  j["sample_count"] = total;
  j["mass"] = scenario.truth.mass;
  j["g"] = scenario.truth.g;
  j["r_bg"] = mat3_to_json(scenario.truth.r_bg.matrix());
  j["f_base"] = vec3_to_json(derive_f_base(scenario.truth));
  j["f_bias"] = vec3_to_json(scenario.truth.f_bias);
  j["centroid"] = vec3_to_json(scenario.truth.centroid);
  j["t_bias"] = vec3_to_json(scenario.truth.t_bias);
  j["sigma_f"] = scenario.truth.sigma_f;
  j["sigma_t"] = scenario.truth.sigma_t;
  j["bias_drift_rate"] = scenario.truth.bias_drift_rate;
  return j;
}

std::optional<std::size_t> eval_start_from_truth_json(const nlohmann::json & truth)
{
  if (truth.contains("eval_start") && truth["eval_start"].is_number_unsigned()) {
    return truth["eval_start"].get<std::size_t>();
  }
  return std::nullopt;
}

nlohmann::json params_to_json(const PipelineRunResult & result)
{
  nlohmann::json j;
  j["f_base"] = vec3_to_json(result.params.force.f_base);
  j["f_bias"] = vec3_to_json(result.params.force.f_bias);
  j["centroid"] = vec3_to_json(result.params.torque.centroid);
  j["t_bias"] = vec3_to_json(result.params.torque.t_bias);
  j["force_converged"] = result.force_converged_after >= 0;
  j["torque_converged"] = result.torque_converged_after >= 0;
  j["force_converged_after_samples"] = result.force_converged_after;
  j["torque_converged_after_samples"] = result.torque_converged_after;
  return j;
}

namespace
{

template<typename OutputLike>
Report build_report_impl(
  std::span<const SensorSample> samples, std::span<const OutputLike> outputs,
  std::size_t eval_start)
{
  if (samples.size() != outputs.size()) {
    throw ParseError("sample and output row counts differ");
  }
  if (eval_start >= samples.size()) {
    throw EmptyInput("evaluation window is empty");
  }
  Report report;
  report.eval_start = eval_start;
  report.eval_count = samples.size() - eval_start;
  AxisSeries before;
  AxisSeries after;
  for (std::size_t i = eval_start; i < samples.size(); ++i) {
    for (int axis = 0; axis < 3; ++axis) {
      before[static_cast<std::size_t>(axis)].push_back(samples[i].wrench.force(axis));
      before[static_cast<std::size_t>(axis) + 3].push_back(samples[i].wrench.torque(axis));
      after[static_cast<std::size_t>(axis)].push_back(outputs[i].f_contact(axis));
      after[static_cast<std::size_t>(axis) + 3].push_back(outputs[i].t_contact(axis));
    }
  }
  report.rows = before_after_table(before, after);
  report.bounds_after = bounds_report(after);
  return report;
}

}  // namespace

Report build_report(
  std::span<const SensorSample> samples, std::span<const PipelineOutput> outputs,
  std::size_t eval_start)
{
  return build_report_impl(samples, outputs, eval_start);
}

Report build_report(
  std::span<const SensorSample> samples, std::span<const OutputRecord> outputs,
  std::size_t eval_start)
{
  return build_report_impl(samples, outputs, eval_start);
}

nlohmann::json report_to_json(const Report & report)
{
  nlohmann::json j;
  j["eval_start"] = report.eval_start;
  j["eval_count"] = report.eval_count;
  nlohmann::json rows = nlohmann::json::array();
  for (const ComparisonRow & row : report.rows) {
    nlohmann::json r;
    r["component"] = row.component;
    r["before"] = {
      {"mae", row.before.mae}, {"max_ae", row.before.max_ae},
      {"std", row.before.std_dev}, {"n", row.before.n}};
    r["after"] = {
      {"mae", row.after.mae}, {"max_ae", row.after.max_ae},
      {"std", row.after.std_dev}, {"n", row.after.n}};
    r["reduction_pct"] = row.reduction_pct;
    rows.push_back(r);
  }
  j["rows"] = rows;
  nlohmann::json bounds;
  for (std::size_t axis = 0; axis < kWrenchAxes.size(); ++axis) {
    bounds[kWrenchAxes[axis]] = report.bounds_after[axis];
  }
  j["bounds_after"] = bounds;
  return j;
}

std::string report_to_text(const Report & report)
{
  std::string out;
  char buf[160];
  std::snprintf(
    buf, sizeof(buf), "evaluation window: samples %zu.. (%zu samples)\n",
    report.eval_start, report.eval_count);
  out += buf;
  std::snprintf(
    buf, sizeof(buf), "%-5s %12s %12s %12s %12s %10s %10s\n",
    "axis", "mae before", "mae after", "max before", "max after", "std after", "reduction");
  out += buf;
  for (const ComparisonRow & row : report.rows) {
    std::snprintf(
      buf, sizeof(buf), "%-5s %12.6f %12.6f %12.6f %12.6f %10.6f %9.2f%%\n",
      row.component.c_str(), row.before.mae, row.after.mae, row.before.max_ae,
      row.after.max_ae, row.after.std_dev, row.reduction_pct);
    out += buf;
  }
  return out;
}

RunConfig run_config_from_json(const nlohmann::json & j)
{
  reject_unknown_keys(
    j, {"seed", "pipeline", "scenario", "input", "out_dir", "omega_deg_s", "live_rate",
      "eval_start"}, "run config");
  RunConfig config;
  try {
    config.seed = j.value("seed", config.seed);
    config.scenario = j.value("scenario", config.scenario);
    config.input_path = j.value("input", config.input_path);
    config.out_dir = j.value("out_dir", config.out_dir);
    if (j.contains("omega_deg_s")) {
      config.omega_deg_s = j["omega_deg_s"].get<double>();
    }
    config.live_rate = j.value("live_rate", config.live_rate);
    if (j.contains("eval_start")) {
      config.eval_start = j["eval_start"].get<std::size_t>();
    }
    if (j.contains("pipeline")) {
      const nlohmann::json & p = j["pipeline"];
      reject_unknown_keys(p, {"f_th", "tau_th", "force_rls", "torque_rls"}, "pipeline config");
      config.pipeline.f_th = p.value("f_th", config.pipeline.f_th);
      config.pipeline.tau_th = p.value("tau_th", config.pipeline.tau_th);
      if (p.contains("force_rls")) {
        config.pipeline.force_rls = rls_config_from_json(p["force_rls"], "force_rls config");
      }
      if (p.contains("torque_rls")) {
        config.pipeline.torque_rls = rls_config_from_json(p["torque_rls"], "torque_rls config");
      }
    }
  } catch (const nlohmann::json::exception & e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return config;
}

RunConfig read_run_config_file(const std::filesystem::path & path)
{
  return run_config_from_json(read_json_file(path));
}

void write_text_file(const std::filesystem::path & path, const std::string & content)
{
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::string read_text_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_json_file(const std::filesystem::path & path, const nlohmann::json & j)
{
  write_text_file(path, j.dump(2) + "\n");
}

nlohmann::json read_json_file(const std::filesystem::path & path)
{
  const std::string text = read_text_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception & e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace ftcomp
