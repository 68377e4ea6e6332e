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

#include "ftcomp/comp_model.hpp"

namespace ftcomp
{

MeasurementRow force_measurement_row(const RotationMatrix & r_eb, const Vec3 & f_raw)
{
  MeasurementRow row;
  row.c.leftCols<3>() = r_eb.matrix();
  row.c.rightCols<3>() = Mat3::Identity();
  row.y = f_raw;
  return row;
}

MeasurementRow torque_measurement_row(const Vec3 & delta_f, const Vec3 & t_raw)
{
  MeasurementRow row;
  row.c.leftCols<3>() = -skew(delta_f);
  row.c.rightCols<3>() = Mat3::Identity();
  row.y = t_raw;
  return row;
}

Vec3 predict_noncontact_force(const ForceParams & params, const RotationMatrix & r_eb)
{
  return r_eb * params.f_base + params.f_bias;
}

Vec3 compensate_force(const ForceParams & params, const RotationMatrix & r_eb, const Vec3 & f_raw)
{
  return f_raw - predict_noncontact_force(params, r_eb);
}

Vec3 compensate_torque(
  const CompensationParams & params, const RotationMatrix & r_eb, const Vec3 & t_raw)
{
  const Vec3 gravity_force = r_eb * params.force.f_base;
  return t_raw - params.torque.centroid.cross(gravity_force) - params.torque.t_bias;
}

}  // namespace ftcomp
