// Copyright 2026 The isingqa Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace isingqa {

double normal_cdf(double x, double mean = 0.0, double sd = 1.0);

double mean(std::span<const double> xs);
/// Unbiased sample variance.
double variance(std::span<const double> xs);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  std::size_t pooled_cells = 0;
};

/// Goodness of fit of counts against probabilities. Cells whose expected
/// count is below min_expected are pooled into one cell.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities,
                               double min_expected = 5.0);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

/// Survival function of the Kolmogorov distribution.
double kolmogorov_sf(double lambda);

/// One-sample Kolmogorov-Smirnov test; p-value from the asymptotic law with
/// Stephens' small-sample correction.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

struct SignTestResult {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t ties = 0;
  /// One-sided: P(Bin(positive + negative, 1/2) >= positive).
  double p_value = 1.0;
};

/// Ties (exact zero differences) are dropped.
SignTestResult sign_test_greater(std::span<const double> differences);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace isingqa
