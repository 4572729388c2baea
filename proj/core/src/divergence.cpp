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

#include "varcal/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace varcal {

namespace {

void require_nonempty(std::size_t na, std::size_t nb, const char* what) {
  if (na == 0 || nb == 0) throw std::invalid_argument(std::string(what) + ": empty sample set");
}

std::vector<double> sorted_copy(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double wasserstein_1(std::span<const double> a, std::span<const double> b) {
  require_nonempty(a.size(), b.size(), "wasserstein_1");
  const auto sa = sorted_copy(a);
  const auto sb = sorted_copy(b);
  const auto na = static_cast<double>(sa.size());
  const auto nb = static_cast<double>(sb.size());

  // Between consecutive support points F_a = i/na and F_b = j/nb, so
  // |F_a - F_b| = |i*nb - j*na| / (na*nb) with an integer numerator.
  std::size_t i = 0, j = 0;
  double t = std::min(sa.front(), sb.front());
  double acc = 0.0;
  while (i < sa.size() || j < sb.size()) {
    double next;
    if (j == sb.size() || (i < sa.size() && sa[i] <= sb[j])) {
      next = sa[i];
    } else {
      next = sb[j];
    }
    acc += std::abs(static_cast<double>(i) * nb - static_cast<double>(j) * na) * (next - t);
    t = next;
    while (i < sa.size() && sa[i] == t) ++i;
    while (j < sb.size() && sb[j] == t) ++j;
  }
  return acc / (na * nb);
}

double wasserstein_1(const ScalarSampleSet& a, const ScalarSampleSet& b) {
  return wasserstein_1(std::span<const double>(a.values), std::span<const double>(b.values));
}

double wasserstein_1_sorted_pairing(std::span<const double> a, std::span<const double> b) {
  require_nonempty(a.size(), b.size(), "wasserstein_1_sorted_pairing");
  if (a.size() != b.size()) {
    throw std::invalid_argument("wasserstein_1_sorted_pairing: sizes differ");
  }
  const auto sa = sorted_copy(a);
  const auto sb = sorted_copy(b);
  double acc = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) acc += std::abs(sa[i] - sb[i]);
  return acc / static_cast<double>(sa.size());
}

double wasserstein_1_weighted(std::span<const WeightedPoint> a, std::span<const WeightedPoint> b) {
  require_nonempty(a.size(), b.size(), "wasserstein_1_weighted");
  auto prepare = [](std::span<const WeightedPoint> pts) {
    std::vector<WeightedPoint> out(pts.begin(), pts.end());
    double total = 0.0;
    for (const auto& p : out) {
      if (!(p.weight >= 0.0)) throw std::invalid_argument("wasserstein_1_weighted: negative weight");
      total += p.weight;
    }
    if (!(total > 0.0)) throw std::invalid_argument("wasserstein_1_weighted: zero total weight");
    for (auto& p : out) p.weight /= total;
    std::sort(out.begin(), out.end(),
              [](const WeightedPoint& x, const WeightedPoint& y) { return x.value < y.value; });
    return out;
  };
  const auto sa = prepare(a);
  const auto sb = prepare(b);
  std::size_t i = 0, j = 0;
  double fa = 0.0, fb = 0.0;
  double t = std::min(sa.front().value, sb.front().value);
  double acc = 0.0;
  while (i < sa.size() || j < sb.size()) {
    double next;
    if (j == sb.size() || (i < sa.size() && sa[i].value <= sb[j].value)) {
      next = sa[i].value;
    } else {
      next = sb[j].value;
    }
    acc += std::abs(fa - fb) * (next - t);
    t = next;
    while (i < sa.size() && sa[i].value == t) fa += sa[i++].weight;
    while (j < sb.size() && sb[j].value == t) fb += sb[j++].weight;
  }
  return acc;
}

double mean_difference(std::span<const double> model_side, std::span<const double> human_side) {
  require_nonempty(model_side.size(), human_side.size(), "mean_difference");
  return mean_of(model_side) - mean_of(human_side);
}

double mean_difference(const ScalarSampleSet& model_side, const ScalarSampleSet& human_side) {
  return mean_difference(std::span<const double>(model_side.values),
                         std::span<const double>(human_side.values));
}

DivergenceValue divergence(const ScalarSampleSet& model_side, const ScalarSampleSet& human_side) {
  return {wasserstein_1(model_side, human_side), mean_difference(model_side, human_side),
          model_side.values.size(), human_side.values.size()};
}

Histogram make_histogram(std::span<const double> values, double lower, double upper,
                         double bin_width) {
  if (!(bin_width > 0.0) || !(upper > lower)) {
    throw std::invalid_argument("make_histogram: invalid range or bin width");
  }
  // Round so that e.g. 1.0 / 0.02 yields 50 bins, not 51.
  const auto bins = static_cast<std::size_t>(std::ceil((upper - lower) / bin_width - 1e-9));
  Histogram h{lower, bin_width, std::vector<std::size_t>(bins, 0)};
  for (double v : values) {
    const double pos = (v - lower) / bin_width + 1e-9;
    std::size_t bin = pos <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(pos));
    h.counts[std::min(bin, bins - 1)]++;
  }
  return h;
}

SummaryStats summary_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summary_stats: empty input");
  SummaryStats s;
  s.mean = mean_of(values);
  auto sorted = sorted_copy(values);
  const std::size_t n = sorted.size();
  s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(n));
  return s;
}

DivergenceSummary summarize(std::span<const DivergenceValue> values, double bin_width) {
  if (values.empty()) throw std::invalid_argument("summarize: empty input");
  std::vector<double> w1, mu;
  w1.reserve(values.size());
  mu.reserve(values.size());
  for (const auto& v : values) {
    w1.push_back(v.w1);
    mu.push_back(v.mu_diff);
  }
  DivergenceSummary out;
  out.count = values.size();
  out.w1 = summary_stats(w1);
  out.mu_diff = summary_stats(mu);
  out.w1_histogram = make_histogram(w1, 0.0, 1.0, bin_width);
  out.mu_histogram = make_histogram(mu, -1.0, 1.0, bin_width);
  return out;
}

}  // namespace varcal
