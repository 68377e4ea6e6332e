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

#ifndef FTCOMP_METRICS_HPP_
#define FTCOMP_METRICS_HPP_

#include <array>
#include <span>
#include <string>
#include <vector>

namespace ftcomp
{

/// Mean absolute error, worst-case absolute error, and population standard
/// deviation of a residual series.
struct ErrorStats
{
  double mae = 0.0;
  double max_ae = 0.0;
  double std_dev = 0.0;
  std::size_t n = 0;
};

/// Throws EmptyInput on an empty series.
ErrorStats error_stats(std::span<const double> values);

/// Axis order used for every per-axis report.
inline constexpr std::array<const char *, 6> kWrenchAxes = {"fx", "fy", "fz", "tx", "ty", "tz"};

/// Residuals of the six wrench axes, kWrenchAxes order.
using AxisSeries = std::array<std::vector<double>, 6>;

struct ComparisonRow
{
  std::string component;
  ErrorStats before;
  ErrorStats after;
  double reduction_pct = 0.0;  ///< 100 * (before.mae - after.mae) / before.mae
};

/// Before/after error table over the six wrench axes. The two series must
/// have equal lengths per axis.
std::vector<ComparisonRow> before_after_table(const AxisSeries & before, const AxisSeries & after);

/// Symmetric per-axis error bound: max |residual| per axis, reported as +/-b.
std::array<double, 6> bounds_report(const AxisSeries & compensated);

}  // namespace ftcomp

#endif  // FTCOMP_METRICS_HPP_
