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

#ifndef FTCOMP_PIPELINE_HPP_
#define FTCOMP_PIPELINE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ftcomp/rls.hpp"

namespace ftcomp
{

/// One timestamped sensor reading with the end-to-base rotation from forward
/// kinematics (the transpose of the base-to-end rotation).
struct SensorSample
{
  double t = 0.0;  ///< seconds, strictly increasing within a stream
  Wrench wrench;   ///< raw force/torque in the sensor frame
  RotationMatrix r_eb;
};

struct PipelineConfig
{
  RlsConfig force_rls{};
  RlsConfig torque_rls{};
  double f_th = 0.5;     ///< N, force-residual contact threshold
  double tau_th = 0.02;  ///< Nm, torque-residual contact threshold
};

/// Per-sample result of the cascade.
struct PipelineOutput
{
  Vec3 f_contact = Vec3::Zero();
  Vec3 t_contact = Vec3::Zero();  ///< zero until the torque stage is active
  bool force_converged = false;
  bool torque_converged = false;
  bool in_contact_force = false;   ///< force residual at or above f_th
  bool in_contact_torque = false;  ///< torque residual at or above tau_th
  bool torque_active = false;      ///< torque stage has started (cascade gate)
  CompensationParams params;       ///< estimates as of this sample
};

/// Cascaded online estimator: a force stage identifies the instrument
/// gravity vector and force offset; once it converges, a torque stage
/// identifies the centroid and torque offset from bias-corrected force
/// readings. Each stage pauses its updates while its own residual exceeds
/// the contact threshold, so external contact cannot contaminate the
/// estimates; updates resume as soon as the residual falls back below the
/// threshold. Before convergence updates run unconditionally, which assumes
/// the stream starts in a no-contact state.
class Pipeline
{
public:
  /// Both stages start from random estimates (components uniform in [-1, 1],
  /// drawn from the seeded generator) with P0 = p0_scale * I.
  Pipeline(const PipelineConfig & config, std::uint64_t seed);

  /// Processes one sample. Throws NonMonotonicTime when the timestamp does
  /// not strictly increase, and propagates SingularInnovation.
  PipelineOutput step(const SensorSample & sample);

  CompensationParams params() const;
  const PipelineConfig & config() const {return config_;}
  const RlsEstimator & force_estimator() const {return force_;}
  const RlsEstimator & torque_estimator() const {return torque_;}
  bool torque_active() const {return force_.converged();}

private:
  PipelineConfig config_;
  RlsEstimator force_;
  RlsEstimator torque_;
  double last_t_ = 0.0;
  bool seen_sample_ = false;
};

struct PipelineRunResult
{
  CompensationParams params;
  std::vector<PipelineOutput> outputs;
  std::int64_t force_converged_after = -1;   ///< samples consumed, -1 if never
  std::int64_t torque_converged_after = -1;  ///< samples consumed, -1 if never
};

/// Folds Pipeline::step over a sample stream. Throws EmptyInput on an empty
/// stream.
PipelineRunResult run_pipeline(
  const PipelineConfig & config, std::uint64_t seed, std::span<const SensorSample> samples);

}  // namespace ftcomp

#endif  // FTCOMP_PIPELINE_HPP_
