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

#ifndef FTCOMP_COMP_MODEL_HPP_
#define FTCOMP_COMP_MODEL_HPP_

#include "ftcomp/so3.hpp"

namespace ftcomp
{

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat36 = Eigen::Matrix<double, 3, 6>;

/// Force-stage parameters: instrument gravity expressed in the robot base
/// frame and the sensor force offset. The parameter vector layout is
/// [f_base; f_bias].
struct ForceParams
{
  Vec3 f_base = Vec3::Zero();  ///< N, constant in the base frame
  Vec3 f_bias = Vec3::Zero();  ///< N, constant in the sensor frame

  static ForceParams from_vector(const Vec6 & x)
  {
    return ForceParams{x.head<3>(), x.tail<3>()};
  }

  Vec6 to_vector() const
  {
    Vec6 x;
    x << f_base, f_bias;
    return x;
  }
};

/// Torque-stage parameters: instrument centroid in the sensor frame and the
/// sensor torque offset. The parameter vector layout is [centroid; t_bias].
struct TorqueParams
{
  Vec3 centroid = Vec3::Zero();  ///< m
  Vec3 t_bias = Vec3::Zero();    ///< Nm

  static TorqueParams from_vector(const Vec6 & x)
  {
    return TorqueParams{x.head<3>(), x.tail<3>()};
  }

  Vec6 to_vector() const
  {
    Vec6 x;
    x << centroid, t_bias;
    return x;
  }
};

/// Everything the cascade identifies.
struct CompensationParams
{
  ForceParams force;
  TorqueParams torque;
};

/// One linear measurement y = C x: a 3-vector observation of the 6-vector
/// parameter state.
struct MeasurementRow
{
  Mat36 c = Mat36::Zero();
  Vec3 y = Vec3::Zero();
};

/// Force-stage row: C = [R_eb | I], y = raw force. Columns 1-3 multiply
/// f_base, columns 4-6 multiply f_bias.
MeasurementRow force_measurement_row(const RotationMatrix & r_eb, const Vec3 & f_raw);

/// Torque-stage row: C = [-skew(delta_f) | I], y = raw torque, where delta_f
/// is the bias-corrected force reading. Columns 1-3 multiply the centroid,
/// columns 4-6 multiply t_bias.
MeasurementRow torque_measurement_row(const Vec3 & delta_f, const Vec3 & t_raw);

/// Non-contact force prediction R_eb * f_base + f_bias.
Vec3 predict_noncontact_force(const ForceParams & params, const RotationMatrix & r_eb);

/// Contact force estimate f_raw minus the non-contact prediction.
Vec3 compensate_force(const ForceParams & params, const RotationMatrix & r_eb, const Vec3 & f_raw);

/// Contact torque estimate t_raw - skew(centroid) * (R_eb * f_base) - t_bias.
/// Uses the identified gravity model rather than the instantaneous force
/// reading, so a contact force cannot corrupt the gravity-torque prediction
/// while the contact lasts.
Vec3 compensate_torque(
  const CompensationParams & params, const RotationMatrix & r_eb, const Vec3 & t_raw);

}  // namespace ftcomp

#endif  // FTCOMP_COMP_MODEL_HPP_
