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

#include "ftcomp/so3.hpp"

#include <cmath>

#include "ftcomp/errors.hpp"

namespace ftcomp
{

Mat3 skew(const Vec3 & p)
{
  Mat3 s;
  s << 0.0, -p.z(), p.y(),
    p.z(), 0.0, -p.x(),
    -p.y(), p.x(), 0.0;
  return s;
}

bool is_rotation(const Mat3 & m, double tol)
{
  if (!m.allFinite()) {
    return false;
  }
  const double ortho_err = (m.transpose() * m - Mat3::Identity()).norm();
  const double det_err = std::abs(m.determinant() - 1.0);
  return ortho_err <= tol && det_err <= tol;
}

RotationMatrix RotationMatrix::axis_angle(const Vec3 & axis, double angle_rad)
{
  const double n = axis.norm();
  if (n == 0.0) {
    return RotationMatrix();
  }
  const Vec3 u = axis / n;
  const Mat3 k = skew(u);
  const Mat3 m = Mat3::Identity() + std::sin(angle_rad) * k +
    (1.0 - std::cos(angle_rad)) * (k * k);
  return RotationMatrix(m);
}

RotationMatrix RotationMatrix::from_unit_quaternion(double w, double x, double y, double z)
{
  return RotationMatrix(Eigen::Quaterniond(w, x, y, z).normalized().toRotationMatrix());
}

RotationMatrix validate_rotation(const Mat3 & m, ValidationMode mode)
{
  if (mode == ValidationMode::Strict) {
    if (!m.allFinite()) {
      throw NotARotation("matrix has non-finite entries");
    }
    if (!is_rotation(m)) {
      throw NotARotation("orthonormality or determinant check failed");
    }
    return RotationMatrix(m);
  }
  if (!m.allFinite()) {
    throw NotARotation("matrix has non-finite entries");
  }
  // Polar projection: with m = U S V', the closest rotation in Frobenius
  // norm is U V', with the last column of U flipped when det(U V') < 0.
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  const Mat3 v = svd.matrixV();
  if ((u * v.transpose()).determinant() < 0.0) {
    u.col(2) *= -1.0;
  }
  return RotationMatrix(u * v.transpose());
}

Wrench gravity_wrench(const RotationMatrix & r_sg, const Vec3 & centroid, const Vec3 & f_mg)
{
  Wrench w;
  w.force = r_sg * f_mg;
  w.torque = centroid.cross(w.force);
  return w;
}

}  // namespace ftcomp
