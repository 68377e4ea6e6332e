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

#include <algorithm>
#include <vector>

#include "ftcomp/errors.hpp"
#include "ftcomp/metrics.hpp"
#include "ftcomp/rng.hpp"

using namespace ftcomp;

TEST_SUITE("metrics")
{

TEST_CASE("alternating unit residuals")
{
  const std::vector<double> values{1.0, -1.0, 1.0, -1.0};
  const ErrorStats stats = error_stats(values);
  CHECK(stats.mae == doctest::Approx(1.0));
  CHECK(stats.max_ae == doctest::Approx(1.0));
  CHECK(stats.std_dev == doctest::Approx(1.0));
  CHECK(stats.n == 4);
}

TEST_CASE("all-zero residuals")
{
  const std::vector<double> values{0.0, 0.0, 0.0};
  const ErrorStats stats = error_stats(values);
  CHECK(stats.mae == 0.0);
  CHECK(stats.max_ae == 0.0);
  CHECK(stats.std_dev == 0.0);
}

TEST_CASE("empty input is an error")
{
  CHECK_THROWS_AS(error_stats({}), EmptyInput);
}

TEST_CASE("stats are permutation invariant")
{
  Rng rng(127);
  std::vector<double> values;
  for (int i = 0; i < 200; ++i) {
    values.push_back(rng.normal(0.1, 2.0));
  }
  const ErrorStats original = error_stats(values);
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.next_u64() % i]);
  }
  const ErrorStats shuffled = error_stats(values);
  CHECK(original.mae == doctest::Approx(shuffled.mae));
  CHECK(original.max_ae == doctest::Approx(shuffled.max_ae));
  CHECK(original.std_dev == doctest::Approx(shuffled.std_dev));
}

TEST_CASE("mae never exceeds max_ae and zero spread means equal values")
{
  Rng rng(131);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values;
    const int n = 1 + static_cast<int>(rng.next_u64() % 40);
    for (int i = 0; i < n; ++i) {
      values.push_back(rng.uniform(-5.0, 5.0));
    }
    const ErrorStats stats = error_stats(values);
    CHECK(stats.mae <= stats.max_ae + 1e-15);
  }
  const ErrorStats constant = error_stats(std::vector<double>{2.5, 2.5, 2.5});
  CHECK(constant.std_dev == 0.0);
}

TEST_CASE("reduction percentage reproduces a reference row")
{
  AxisSeries before;
  AxisSeries after;
  for (std::size_t axis = 0; axis < 6; ++axis) {
    before[axis] = {5.055};
    after[axis] = {0.113};
  }
  const auto rows = before_after_table(before, after);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].component == "fx");
  CHECK(rows[0].reduction_pct == doctest::Approx(97.76).epsilon(1e-3));
}

TEST_CASE("identical before and after means zero reduction")
{
  AxisSeries series;
  for (auto & axis : series) {
    axis = {0.5, -0.25, 1.0};
  }
  const auto rows = before_after_table(series, series);
  for (const ComparisonRow & row : rows) {
    CHECK(row.reduction_pct == doctest::Approx(0.0));
  }
}

TEST_CASE("reduction is invariant under common positive scaling")
{
  Rng rng(137);
  AxisSeries before;
  AxisSeries after;
  AxisSeries before_scaled;
  AxisSeries after_scaled;
  const double scale = 3.7;
  for (std::size_t axis = 0; axis < 6; ++axis) {
    for (int i = 0; i < 50; ++i) {
      const double b = rng.normal(0.0, 2.0);
      const double a = rng.normal(0.0, 0.1);
      before[axis].push_back(b);
      after[axis].push_back(a);
      before_scaled[axis].push_back(scale * b);
      after_scaled[axis].push_back(scale * a);
    }
  }
  const auto rows = before_after_table(before, after);
  const auto scaled = before_after_table(before_scaled, after_scaled);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].reduction_pct == doctest::Approx(scaled[i].reduction_pct));
  }
}

TEST_CASE("length mismatch is rejected")
{
  AxisSeries before;
  AxisSeries after;
  for (std::size_t axis = 0; axis < 6; ++axis) {
    before[axis] = {1.0, 2.0};
    after[axis] = {1.0};
  }
  CHECK_THROWS_AS(before_after_table(before, after), std::invalid_argument);
}

TEST_CASE("bounds are per-axis maxima of absolute values")
{
  AxisSeries series;
  for (auto & axis : series) {
    axis = {0.3, -0.58, 0.1};
  }
  const auto bounds = bounds_report(series);
  for (double bound : bounds) {
    CHECK(bound == doctest::Approx(0.58));
  }
}

}  // TEST_SUITE
