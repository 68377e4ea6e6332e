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

#ifndef FTCOMP_SO3_HPP_
#define FTCOMP_SO3_HPP_

#include <Eigen/Dense>

namespace ftcomp
{

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Paired force (N) and torque (Nm) expressed in one frame.
struct Wrench
{
  Vec3 force = Vec3::Zero();
  Vec3 torque = Vec3::Zero();
};

/// Frobenius tolerance on R'R - I and |det R - 1| accepted as a rotation.
/// Tight enough to catch corrupted data, loose enough for forward-kinematics
/// round-off.
inline constexpr double kRotationTolerance = 1e-6;

/// Skew-symmetric matrix of p, i.e. skew(p) * v == p.cross(v) for all v.
Mat3 skew(const Vec3 & p);

/// True when m is orthonormal with determinant +1 within tol.
bool is_rotation(const Mat3 & m, double tol = kRotationTolerance);

enum class ValidationMode
{
  Strict,   ///< reject matrices that fail the SO(3) checks
  Project,  ///< replace the input with the nearest rotation
};

/// A validated member of SO(3). Instances only exist through validation,
/// projection, or constructions that produce orthonormal matrices directly,
/// so a RotationMatrix argument never needs re-checking.
class RotationMatrix
{
public:
  /// Identity rotation.
  RotationMatrix()
  : m_(Mat3::Identity()) {}

  static RotationMatrix identity() {return RotationMatrix();}

  /// Rodrigues rotation about `axis` (normalized internally) by `angle_rad`.
  static RotationMatrix axis_angle(const Vec3 & axis, double angle_rad);

  /// Rotation from a unit quaternion (w, x, y, z).
  static RotationMatrix from_unit_quaternion(double w, double x, double y, double z);

  const Mat3 & matrix() const {return m_;}

  RotationMatrix transposed() const {return RotationMatrix(m_.transpose());}

  RotationMatrix operator*(const RotationMatrix & rhs) const
  {
    return RotationMatrix(m_ * rhs.m_);
  }

  Vec3 operator*(const Vec3 & v) const {return m_ * v;}

private:
  explicit RotationMatrix(const Mat3 & m)
  : m_(m) {}

  friend RotationMatrix validate_rotation(const Mat3 &, ValidationMode);

  Mat3 m_;
};

/// Checks m against the SO(3) invariants. Strict mode throws NotARotation on
/// failure; Project mode returns the polar-decomposition projection of m onto
/// SO(3) instead.
RotationMatrix validate_rotation(const Mat3 & m, ValidationMode mode);

/// Wrench produced in the sensor frame by a pure force f_mg acting at the
/// point `centroid`, with r_sg rotating f_mg from its native frame into the
/// sensor frame: force = R * f_mg, torque = centroid x force.
Wrench gravity_wrench(const RotationMatrix & r_sg, const Vec3 & centroid, const Vec3 & f_mg);

}  // namespace ftcomp

#endif  // FTCOMP_SO3_HPP_
