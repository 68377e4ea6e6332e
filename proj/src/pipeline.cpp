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

#include "ftcomp/pipeline.hpp"

#include "ftcomp/errors.hpp"
#include "ftcomp/rng.hpp"

namespace ftcomp
{

namespace
{

Vec6 random_initial_estimate(Rng & rng)
{
  Vec6 x;
  for (int i = 0; i < 6; ++i) {
    x(i) = rng.uniform(-1.0, 1.0);
  }
  return x;
}

}  // namespace

Pipeline::Pipeline(const PipelineConfig & config, std::uint64_t seed)
: config_(config),
  force_([&] {
      Rng rng(seed);
      return RlsEstimator(config.force_rls, random_initial_estimate(rng));
    }()),
  torque_([&] {
      Rng rng(seed);
      random_initial_estimate(rng);  // skip the force stage's draw
      return RlsEstimator(config.torque_rls, random_initial_estimate(rng));
    }())
{
}

PipelineOutput Pipeline::step(const SensorSample & sample)
{
  if (seen_sample_ && !(sample.t > last_t_)) {
    throw NonMonotonicTime("timestamps must strictly increase");
  }
  seen_sample_ = true;
  last_t_ = sample.t;

  PipelineOutput out;

  const MeasurementRow force_row = force_measurement_row(sample.r_eb, sample.wrench.force);
  const double force_residual = force_.residual_norm(force_row);
  out.in_contact_force = force_residual >= config_.f_th;
  if (force_residual < config_.f_th || !force_.converged()) {
    force_.update(force_row);
  }
  const ForceParams force_params = ForceParams::from_vector(force_.estimate());
  out.f_contact = compensate_force(force_params, sample.r_eb, sample.wrench.force);
  out.force_converged = force_.converged();

  out.torque_active = force_.converged();
  if (out.torque_active) {
    const Vec3 delta_f = sample.wrench.force - force_params.f_bias;
    const MeasurementRow torque_row = torque_measurement_row(delta_f, sample.wrench.torque);
    const double torque_residual = torque_.residual_norm(torque_row);
    out.in_contact_torque = torque_residual >= config_.tau_th;
    if (torque_residual < config_.tau_th || !torque_.converged()) {
      torque_.update(torque_row);
    }
    const TorqueParams torque_params = TorqueParams::from_vector(torque_.estimate());
    out.t_contact =
      compensate_torque({force_params, torque_params}, sample.r_eb, sample.wrench.torque);
  }
  out.torque_converged = torque_.converged();
  out.params = params();
  return out;
}

CompensationParams Pipeline::params() const
{
  return CompensationParams{
    ForceParams::from_vector(force_.estimate()),
    TorqueParams::from_vector(torque_.estimate())};
}

PipelineRunResult run_pipeline(
  const PipelineConfig & config, std::uint64_t seed, std::span<const SensorSample> samples)
{
  if (samples.empty()) {
    throw EmptyInput("run_pipeline: empty sample stream");
  }
  Pipeline pipeline(config, seed);
  PipelineRunResult result;
  result.outputs.reserve(samples.size());
  std::int64_t index = 0;
  for (const SensorSample & sample : samples) {
    result.outputs.push_back(pipeline.step(sample));
    ++index;
    if (result.force_converged_after < 0 && result.outputs.back().force_converged) {
      result.force_converged_after = index;
    }
    if (result.torque_converged_after < 0 && result.outputs.back().torque_converged) {
      result.torque_converged_after = index;
    }
  }
  result.params = pipeline.params();
  return result;
}

}  // namespace ftcomp
