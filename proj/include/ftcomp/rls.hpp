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

#ifndef FTCOMP_RLS_HPP_
#define FTCOMP_RLS_HPP_

#include <cstdint>
#include <span>

#include "ftcomp/comp_model.hpp"

namespace ftcomp
{

using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Tuning constants for one recursive least-squares stage.
struct RlsConfig
{
  double p0_scale = 1e6;         ///< initial covariance P0 = p0_scale * I
  double r_noise_scale = 2.5e-3; ///< measurement noise R = r_noise_scale * I
  double epsilon = 1e-3;         ///< convergence threshold on ||dx||
  int min_samples = 50;          ///< never declare convergence before this
  int consecutive_required = 10; ///< ||dx|| < epsilon streak length needed
};

/// Recursive least squares over a 6-vector parameter with 3-vector
/// measurements y = C x + noise.
///
/// Each update applies
///   K = P C' (R + C P C')^-1
///   x <- x + K (y - C x)
///   P <- (I - K C) P, then symmetrized
/// and tracks ||dx|| to latch a convergence flag once the correction stays
/// below epsilon for a consecutive run of updates past a minimum sample
/// count. A single small ||dx|| can occur spuriously when consecutive
/// orientations repeat, hence the streak requirement.
class RlsEstimator
{
public:
  RlsEstimator()
  : RlsEstimator(RlsConfig{}, Vec6::Zero()) {}

  /// Throws std::invalid_argument on a non-positive configuration entry
  /// (p0_scale may be zero: a zero prior covariance pins the estimate).
  RlsEstimator(const RlsConfig & config, const Vec6 & x0);

  /// One recursive update. Throws SingularInnovation when R + C P C' has a
  /// condition estimate above 1e12.
  void update(const MeasurementRow & row);

  /// ||C x - y|| for the current estimate, the contact-detection signal.
  double residual_norm(const MeasurementRow & row) const;

  const Vec6 & estimate() const {return x_;}
  const Mat6 & covariance() const {return p_;}
  const Mat3 & noise_covariance() const {return r_;}
  const RlsConfig & config() const {return config_;}
  std::int64_t sample_count() const {return sample_count_;}
  double last_delta_norm() const {return last_delta_norm_;}
  int consecutive_small() const {return consecutive_small_;}
  bool converged() const {return converged_;}

private:
  RlsConfig config_;
  Vec6 x_;
  Mat6 p_;
  Mat3 r_;
  std::int64_t sample_count_ = 0;
  double last_delta_norm_ = 0.0;
  int consecutive_small_ = 0;
  bool converged_ = false;
};

/// Batch least-squares oracle: minimizes ||C x - y||^2 over the stacked rows
/// via a rank-revealing QR factorization. Throws RankDeficient when the
/// stacked matrix has rank < 6 (for example, every sample taken at one
/// orientation) and EmptyInput on an empty list.
Vec6 batch_solve(std::span<const MeasurementRow> rows);

}  // namespace ftcomp

#endif  // FTCOMP_RLS_HPP_
