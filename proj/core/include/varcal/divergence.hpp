// Copyright 2026 The varcal Authors.
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
#include <span>
#include <vector>

#include "varcal/estimators.hpp"

namespace varcal {

struct DivergenceValue {
  double w1 = 0.0;
  /// Model side minus human side.
  double mu_diff = 0.0;
  std::size_t n_left = 0;
  std::size_t n_right = 0;
};

/// Wasserstein-1 distance between two empirical measures with uniform
/// weights: the integral of |F_a(t) - F_b(t)| over t, evaluated exactly on
/// the merged sorted support. Throws std::invalid_argument on empty input.
double wasserstein_1(std::span<const double> a, std::span<const double> b);
double wasserstein_1(const ScalarSampleSet& a, const ScalarSampleSet& b);

/// Equal-size shortcut: mean |sort(a)_i - sort(b)_i|.
double wasserstein_1_sorted_pairing(std::span<const double> a,
                                    std::span<const double> b);

struct WeightedPoint {
  double value;
  double weight;
};

/// Same integral for arbitrary nonnegative weights (normalized internally).
double wasserstein_1_weighted(std::span<const WeightedPoint> a,
                              std::span<const WeightedPoint> b);

double mean_difference(std::span<const double> model_side,
                       std::span<const double> human_side);
double mean_difference(const ScalarSampleSet& model_side,
                       const ScalarSampleSet& human_side);

DivergenceValue divergence(const ScalarSampleSet& model_side,
                           const ScalarSampleSet& human_side);

struct Histogram {
  double lower = 0.0;
  double bin_width = 0.02;
  std::vector<std::size_t> counts;

  double bin_left(std::size_t bin) const { return lower + bin_width * static_cast<double>(bin); }
};

/// Fixed bins over [lower, upper]; values outside are clamped into the end
/// bins and the upper edge belongs to the last bin.
Histogram make_histogram(std::span<const double> values, double lower,
                         double upper, double bin_width);

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  /// Population standard deviation.
  double stddev = 0.0;
};

SummaryStats summary_stats(std::span<const double> values);

struct DivergenceSummary {
  std::size_t count = 0;
  SummaryStats w1;
  SummaryStats mu_diff;
  Histogram w1_histogram;   // over [0, 1]
  Histogram mu_histogram;   // over [-1, 1]
};

inline constexpr double kDefaultBinWidth = 0.02;

DivergenceSummary summarize(std::span<const DivergenceValue> values,
                            double bin_width = kDefaultBinWidth);

}  // namespace varcal
