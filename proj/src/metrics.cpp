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

#include "ftcomp/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "ftcomp/errors.hpp"

namespace ftcomp
{

ErrorStats error_stats(std::span<const double> values)
{
  if (values.empty()) {
    throw EmptyInput("error_stats: empty value list");
  }
  ErrorStats stats;
  stats.n = values.size();
  double sum = 0.0;
  double abs_sum = 0.0;
  for (double v : values) {
    sum += v;
    abs_sum += std::abs(v);
    stats.max_ae = std::max(stats.max_ae, std::abs(v));
  }
  const double count = static_cast<double>(values.size());
  stats.mae = abs_sum / count;
  const double mean = sum / count;
  double var = 0.0;
  for (double v : values) {
    var += (v - mean) * (v - mean);
  }
  // Population (not sample) standard deviation, so reported numbers are
  // reproducible without an n-vs-n-1 convention question.
  stats.std_dev = std::sqrt(var / count);
  return stats;
}

std::vector<ComparisonRow> before_after_table(
  const AxisSeries & before, const AxisSeries & after)
{
  std::vector<ComparisonRow> rows;
  rows.reserve(kWrenchAxes.size());
  for (std::size_t axis = 0; axis < kWrenchAxes.size(); ++axis) {
    if (before[axis].size() != after[axis].size()) {
      throw std::invalid_argument("before/after series length mismatch");
    }
    ComparisonRow row;
    row.component = kWrenchAxes[axis];
    row.before = error_stats(before[axis]);
    row.after = error_stats(after[axis]);
    row.reduction_pct = row.before.mae > 0.0 ?
      100.0 * (row.before.mae - row.after.mae) / row.before.mae : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::array<double, 6> bounds_report(const AxisSeries & compensated)
{
  std::array<double, 6> bounds{};
  for (std::size_t axis = 0; axis < kWrenchAxes.size(); ++axis) {
    bounds[axis] = error_stats(compensated[axis]).max_ae;
  }
  return bounds;
}

}  // namespace ftcomp
