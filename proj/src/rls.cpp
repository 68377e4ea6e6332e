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

#include "ftcomp/rls.hpp"

#include <stdexcept>

#include "ftcomp/errors.hpp"

namespace ftcomp
{

namespace
{

constexpr double kMaxInnovationCondition = 1e12;

}  // namespace

RlsEstimator::RlsEstimator(const RlsConfig & config, const Vec6 & x0)
: config_(config), x_(x0)
{
  if (config.p0_scale < 0.0 || config.r_noise_scale <= 0.0 || config.epsilon <= 0.0 ||
    config.min_samples < 1 || config.consecutive_required < 1)
  {
    throw std::invalid_argument("invalid RLS configuration");
  }
  p_ = config.p0_scale * Mat6::Identity();
  r_ = config.r_noise_scale * Mat3::Identity();
}

void RlsEstimator::update(const MeasurementRow & row)
{
  using Mat63 = Eigen::Matrix<double, 6, 3>;

  const Mat3 innovation_cov = r_ + row.c * p_ * row.c.transpose();
  // The innovation matrix is symmetric 3x3; invert it through its
  // eigendecomposition and reuse the eigenvalues as a condition estimate.
  const Eigen::SelfAdjointEigenSolver<Mat3> eig(innovation_cov);
  const Vec3 eigenvalues = eig.eigenvalues();
  const double lambda_max = eigenvalues.maxCoeff();
  const double lambda_min = eigenvalues.minCoeff();
  if (!(lambda_min * kMaxInnovationCondition > lambda_max)) {
    throw SingularInnovation("innovation covariance condition estimate above 1e12");
  }
  const Mat3 innovation_inv =
    eig.eigenvectors() * eigenvalues.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();

  const Mat63 gain = p_ * row.c.transpose() * innovation_inv;
  const Vec6 delta = gain * (row.y - row.c * x_);
  x_ += delta;
  // Joseph-stabilized covariance propagation. With P0 ~ 1e6 and R ~ 2.5e-3
  // the plain (I - K C) P form cancels eight orders of magnitude and leaves
  // an indefinite P within a handful of updates; this form is algebraically
  // identical for the optimal gain and stays positive semidefinite.
  const Mat6 i_kc = Mat6::Identity() - gain * row.c;
  p_ = i_kc * p_ * i_kc.transpose() + gain * r_ * gain.transpose();
  p_ = 0.5 * (p_ + p_.transpose());

  last_delta_norm_ = delta.norm();
  ++sample_count_;
  if (last_delta_norm_ < config_.epsilon) {
    ++consecutive_small_;
  } else {
    consecutive_small_ = 0;
  }
  if (!converged_ && consecutive_small_ >= config_.consecutive_required &&
    sample_count_ >= config_.min_samples)
  {
    converged_ = true;  // latches
  }
}

double RlsEstimator::residual_norm(const MeasurementRow & row) const
{
  return (row.c * x_ - row.y).norm();
}

Vec6 batch_solve(std::span<const MeasurementRow> rows)
{
  if (rows.empty()) {
    throw EmptyInput("batch_solve: no measurement rows");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd stacked_c(3 * n, 6);
  Eigen::VectorXd stacked_y(3 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    stacked_c.middleRows<3>(3 * i) = rows[static_cast<std::size_t>(i)].c;
    stacked_y.segment<3>(3 * i) = rows[static_cast<std::size_t>(i)].y;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stacked_c);
  qr.setThreshold(1e-8);
  if (qr.rank() < 6) {
    throw RankDeficient("stacked measurement matrix has rank < 6");
  }
  return qr.solve(stacked_y);
}

}  // namespace ftcomp
