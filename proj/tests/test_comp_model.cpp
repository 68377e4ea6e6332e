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

#include <doctest.h>

#include <Eigen/Dense>

#include "ftcomp/comp_model.hpp"
#include "ftcomp/rng.hpp"
#include "ftcomp/simulator.hpp"

using namespace ftcomp;

namespace
{

Vec3 random_vec3(Rng & rng, double scale)
{
  return Vec3(
    rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale));
}

}  // namespace

TEST_SUITE("comp_model")
{

TEST_CASE("force row at identity orientation")
{
  const MeasurementRow row =
    force_measurement_row(RotationMatrix::identity(), Vec3(1.0, 0.0, -2.0));
  Mat36 expected;
  expected << Mat3::Identity(), Mat3::Identity();
  CHECK((row.c - expected).norm() == doctest::Approx(0.0));
  CHECK((row.y - Vec3(1.0, 0.0, -2.0)).norm() == doctest::Approx(0.0));
}

TEST_CASE("force row structure: right block is always the identity")
{
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const RotationMatrix r = random_rotation(rng);
    const MeasurementRow row = force_measurement_row(r, random_vec3(rng, 5.0));
    CHECK((row.c.leftCols<3>() - r.matrix()).norm() == doctest::Approx(0.0));
    CHECK((row.c.rightCols<3>() - Mat3::Identity()).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("noiseless force row satisfies y = C x at the truth")
{
  // f_raw generated directly from the non-contact model at identity.
  const ForceParams truth{Vec3(0.0, 0.0, -2.0), Vec3(1.0, 0.0, 0.0)};
  const RotationMatrix r = RotationMatrix::identity();
  const Vec3 f_raw = predict_noncontact_force(truth, r);
  const MeasurementRow row = force_measurement_row(r, f_raw);
  CHECK((row.y - row.c * truth.to_vector()).norm() < 1e-15);
}

TEST_CASE("torque row with zero delta force")
{
  const MeasurementRow row = torque_measurement_row(Vec3::Zero(), Vec3(0.1, 0.2, 0.3));
  CHECK(row.c.leftCols<3>().isZero(0.0));
  CHECK((row.c.rightCols<3>() - Mat3::Identity()).norm() == doctest::Approx(0.0));
}

TEST_CASE("torque row left block is the negated skew matrix")
{
  const MeasurementRow row = torque_measurement_row(Vec3(1.0, 2.0, 3.0), Vec3::Zero());
  Mat3 expected;
  expected << 0, 3, -2,
    -3, 0, 1,
    2, -1, 0;
  CHECK((row.c.leftCols<3>() - expected).norm() == doctest::Approx(0.0));
  // First row pattern: [0, dz, -dy].
  CHECK(row.c(0, 0) == 0.0);
  CHECK(row.c(0, 1) == 3.0);
  CHECK(row.c(0, 2) == -2.0);
}

TEST_CASE("torque row reproduces the component-wise model")
{
  // Oracle: tau = skew(p) * delta_f + t_bias, evaluated directly.
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Vec3 p = random_vec3(rng, 0.1);
    const Vec3 t_bias = random_vec3(rng, 0.1);
    const Vec3 delta_f = random_vec3(rng, 5.0);
    const Vec3 tau = skew(p) * delta_f + t_bias;
    const MeasurementRow row = torque_measurement_row(delta_f, tau);
    const TorqueParams params{p, t_bias};
    CHECK((row.c * params.to_vector() - tau).norm() < 1e-12);
  }
}

TEST_CASE("predict_noncontact_force direct evaluation")
{
  const ForceParams params{Vec3(0.0, 0.0, -2.0), Vec3(1.0, 0.0, 0.0)};
  const Vec3 f = predict_noncontact_force(params, RotationMatrix::identity());
  CHECK((f - Vec3(1.0, 0.0, -2.0)).norm() == doctest::Approx(0.0));
}

TEST_CASE("predict_noncontact_force with zero gravity is the bias for any orientation")
{
  Rng rng(31);
  const Vec3 bias(0.4, -0.2, 0.9);
  for (int i = 0; i < 20; ++i) {
    const Vec3 f = predict_noncontact_force({Vec3::Zero(), bias}, random_rotation(rng));
    CHECK((f - bias).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("predict_noncontact_force under a half-turn about x")
{
  const RotationMatrix r = RotationMatrix::axis_angle(Vec3::UnitX(), M_PI);
  const Vec3 f = predict_noncontact_force({Vec3(0.0, 0.0, -2.0), Vec3::Zero()}, r);
  CHECK((f - Vec3(0.0, 0.0, 2.0)).norm() < 1e-12);
}

TEST_CASE("compensation zeroes a noiseless non-contact sample")
{
  Rng rng(37);
  GroundTruth truth;
  truth.mass = 0.35;
  truth.r_bg = random_rotation(rng);
  truth.f_bias = random_vec3(rng, 2.0);
  truth.centroid = random_vec3(rng, 0.05);
  truth.t_bias = random_vec3(rng, 0.1);
  truth.sigma_f = 0.0;
  truth.sigma_t = 0.0;
  const CompensationParams params{
    {derive_f_base(truth), truth.f_bias}, {truth.centroid, truth.t_bias}};

  TrajectorySpec spec;
  spec.sample_count = 50;
  spec.seed = 5;
  for (const SensorSample & sample : synthesize_stream(truth, spec, {})) {
    CHECK(compensate_force(params.force, sample.r_eb, sample.wrench.force).norm() < 1e-12);
    CHECK(compensate_torque(params, sample.r_eb, sample.wrench.torque).norm() < 1e-12);
  }
}

TEST_CASE("compensation recovers an injected contact wrench exactly")
{
  GroundTruth truth;
  truth.mass = 0.35;
  truth.f_bias = Vec3(1.0, -0.5, 0.2);
  truth.centroid = Vec3(0.0, 0.0, 0.0435);
  truth.t_bias = Vec3(0.02, 0.0, -0.01);
  truth.sigma_f = 0.0;
  truth.sigma_t = 0.0;
  const CompensationParams params{
    {derive_f_base(truth), truth.f_bias}, {truth.centroid, truth.t_bias}};

  TrajectorySpec spec;
  spec.sample_count = 20;
  spec.sample_rate = 20.0;
  spec.seed = 6;
  ContactEvent event;
  event.t_start = 0.0;
  event.t_end = 1.0;
  event.wrench.force = Vec3(1.0, 0.0, 0.0);
  event.wrench.torque = Vec3(0.0, 0.05, 0.0);
  const std::vector<ContactEvent> contacts{event};
  for (const SensorSample & sample : synthesize_stream(truth, spec, contacts)) {
    const Vec3 fc = compensate_force(params.force, sample.r_eb, sample.wrench.force);
    const Vec3 tc = compensate_torque(params, sample.r_eb, sample.wrench.torque);
    CHECK((fc - event.wrench.force).norm() < 1e-12);
    CHECK((tc - event.wrench.torque).norm() < 1e-12);
  }
}

TEST_CASE("zero parameters leave the raw readings unchanged")
{
  Rng rng(41);
  const Vec3 f_raw = random_vec3(rng, 3.0);
  const Vec3 t_raw = random_vec3(rng, 0.3);
  const RotationMatrix r = random_rotation(rng);
  CHECK((compensate_force(ForceParams{}, r, f_raw) - f_raw).norm() == doctest::Approx(0.0));
  // Zero centroid: compensation reduces to subtracting the torque bias.
  const CompensationParams params{
    ForceParams{Vec3(1.0, 2.0, 3.0), Vec3::Zero()}, TorqueParams{Vec3::Zero(), Vec3(0.1, 0.0, 0.0)}};
  CHECK((compensate_torque(params, r, t_raw) - (t_raw - Vec3(0.1, 0.0, 0.0))).norm() < 1e-15);
}

TEST_CASE("compensate_force is linear in the raw reading")
{
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const ForceParams params{random_vec3(rng, 4.0), random_vec3(rng, 2.0)};
    const RotationMatrix r = random_rotation(rng);
    const Vec3 f1 = random_vec3(rng, 3.0);
    const Vec3 f2 = random_vec3(rng, 3.0);
    const Vec3 diff =
      compensate_force(params, r, f1 + f2) - compensate_force(params, r, f2);
    CHECK((diff - f1).norm() < 1e-12);
  }
}

TEST_CASE("two torque formulations agree in the no-contact case")
{
  // skew(p) * (f_raw - f_bias) + t_bias versus the measurement-row product.
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    const Vec3 p = random_vec3(rng, 0.1);
    const Vec3 t_bias = random_vec3(rng, 0.1);
    const Vec3 f_raw = random_vec3(rng, 5.0);
    const Vec3 f_bias = random_vec3(rng, 2.0);
    const Vec3 delta_f = f_raw - f_bias;
    const Vec3 direct = skew(p) * delta_f + t_bias;
    const MeasurementRow row = torque_measurement_row(delta_f, Vec3::Zero());
    const Vec3 via_row = row.c * TorqueParams{p, t_bias}.to_vector();
    CHECK((direct - via_row).norm() < 1e-12);
  }
}

TEST_CASE("stacked force rows reach rank 6 with three generic orientations")
{
  Rng rng(53);
  Eigen::MatrixXd stacked(9, 6);
  for (int i = 0; i < 3; ++i) {
    stacked.middleRows<3>(3 * i) =
      force_measurement_row(random_rotation(rng), Vec3::Zero()).c;
  }
  CHECK(Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(stacked).rank() == 6);
}

TEST_CASE("stacked force rows at one repeated orientation stay at rank 3")
{
  Rng rng(59);
  const RotationMatrix r = random_rotation(rng);
  Eigen::MatrixXd stacked(15, 6);
  for (int i = 0; i < 5; ++i) {
    stacked.middleRows<3>(3 * i) = force_measurement_row(r, Vec3::Zero()).c;
  }
  CHECK(Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(stacked).rank() == 3);
}

}  // TEST_SUITE
