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

#ifndef FTCOMP_SIMULATOR_HPP_
#define FTCOMP_SIMULATOR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftcomp/pipeline.hpp"
#include "ftcomp/rng.hpp"

namespace ftcomp
{

/// Everything the synthetic sensor knows and the estimator must recover.
struct GroundTruth
{
  double mass = 0.0;  ///< kg
  double g = 9.81;    ///< m/s^2
  RotationMatrix r_bg;  ///< robot installation offset (base vs gravity frame)
  Vec3 f_bias = Vec3::Zero();    ///< N
  Vec3 centroid = Vec3::Zero();  ///< m, instrument centroid in sensor frame
  Vec3 t_bias = Vec3::Zero();    ///< Nm
  double sigma_f = 0.05;         ///< N, per-axis Gaussian force noise
  double sigma_t = 0.005;        ///< Nm, per-axis Gaussian torque noise
  double bias_drift_rate = 0.0;  ///< N/s, linear ramp on each force-bias axis
};

/// Instrument gravity in the robot base frame: r_bg * [0, 0, -mass * g].
Vec3 derive_f_base(const GroundTruth & truth);

enum class TrajectoryKind
{
  RandomOrientations,  ///< independent uniformly random rotation per sample
  AxialRotation,       ///< constant-rate spin about the tool z-axis
  Static,              ///< constant orientation
};

struct TrajectorySpec
{
  TrajectoryKind kind = TrajectoryKind::RandomOrientations;
  double sample_rate = 1000.0;    ///< Hz
  std::size_t sample_count = 0;
  double omega_deg_s = 0.0;       ///< axial kind only
  RotationMatrix initial_orientation;  ///< axial and static kinds
  std::uint64_t seed = 0;         ///< random kind only
};

struct TrajectoryPoint
{
  double t = 0.0;
  RotationMatrix r_eb;
};

/// Uniformly distributed rotation (uniform unit quaternion construction).
RotationMatrix random_rotation(Rng & rng);

/// Samples the orientation trajectory described by spec, timestamps from 0.
std::vector<TrajectoryPoint> generate_trajectory(const TrajectorySpec & spec);

/// External wrench applied over [t_start, t_end), in the sensor frame.
/// A positive ramp makes the pulse trapezoidal: linear fade-in after t_start
/// and fade-out before t_end, each over `ramp` seconds.
struct ContactEvent
{
  double t_start = 0.0;
  double t_end = 0.0;
  Wrench wrench;
  double ramp = 0.0;  ///< s
};

/// Scale factor of an event at time t: 0 outside [t_start, t_end), otherwise
/// the trapezoid height in [0, 1].
double contact_scale(const ContactEvent & event, double t);

/// Raw sensor stream for a trajectory: per sample, gravity seen through the
/// orientation plus bias (with optional linear drift) plus any scheduled
/// contact wrench plus seeded Gaussian noise. Throws EventOutOfRange for a
/// contact outside the trajectory.
std::vector<SensorSample> synthesize_stream(
  const GroundTruth & truth, std::span<const TrajectoryPoint> trajectory,
  std::span<const ContactEvent> contacts, std::uint64_t noise_seed);

/// Convenience overload generating the trajectory from spec; the noise seed
/// is derived from spec.seed.
std::vector<SensorSample> synthesize_stream(
  const GroundTruth & truth, const TrajectorySpec & spec,
  std::span<const ContactEvent> contacts);

/// A ready-made experiment: truth, trajectory segments played back to back,
/// scheduled contacts, and the index of the first evaluation sample (the
/// window metrics are computed over; identification happens before it).
struct Scenario
{
  std::string name;
  std::string description;
  GroundTruth truth;
  std::vector<TrajectorySpec> segments;
  std::vector<ContactEvent> contacts;
  std::size_t eval_start = 0;
  std::uint64_t seed = 42;
};

/// Names accepted by scenario_preset.
std::vector<std::string> scenario_names();

/// Bundled scenarios: "identify" (random poses, no contact),
/// "no_contact_eval" (identification prefix plus 150 evaluation poses),
/// "phantom" (trapezoidal contact pulses at a fixed pose), and
/// "rotation_sweep" (360-degree axial spin under a constant 1.02 N lateral
/// load). Throws UnknownScenario for anything else.
Scenario scenario_preset(std::string_view name);

/// rotation_sweep at a chosen angular velocity (default preset uses 12).
Scenario rotation_sweep_scenario(double omega_deg_s);

/// Full trajectory of a scenario (segments concatenated on a common clock).
std::vector<TrajectoryPoint> scenario_trajectory(const Scenario & scenario);

/// Synthesizes the scenario's sample stream. All randomness derives from
/// scenario.seed, so equal seeds give byte-identical streams.
std::vector<SensorSample> scenario_samples(const Scenario & scenario);

/// Stable sub-seed derivation for independent random streams.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream)
{
  std::uint64_t state = root + 0x9E3779B97F4A7C15ull * (stream + 1);
  return splitmix64(state);
}

}  // namespace ftcomp

#endif  // FTCOMP_SIMULATOR_HPP_
