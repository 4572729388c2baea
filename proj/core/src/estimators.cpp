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

#include "varcal/estimators.hpp"

#include <algorithm>
#include <numeric>

#include "varcal/error.hpp"
#include "varcal/seeding.hpp"

namespace varcal {

std::string_view to_string(SampleKind kind) noexcept {
  switch (kind) {
    case SampleKind::SelfHuman:
      return "self_human";
    case SampleKind::SelfModel:
      return "self_model";
    case SampleKind::Cross:
      return "cross";
    case SampleKind::ControlHalf:
      return "control_half";
  }
  return "unknown";
}

double ScalarSampleSet::mean() const {
  if (values.empty()) throw std::invalid_argument("mean of an empty sample set");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

void SamplingCaps::validate() const {
  if (max_humans < 2) throw ValidationError("must be at least 2", {}, "max_humans");
  if (max_generations < 2) throw ValidationError("must be at least 2", {}, "max_generations");
}

std::uint64_t instance_seed(std::uint64_t global_seed, std::string_view instance_id) {
  return derive_seed(global_seed, instance_id);
}

std::uint64_t human_side_seed(std::uint64_t seed) { return derive_seed(seed, "humans"); }
std::uint64_t model_side_seed(std::uint64_t seed) { return derive_seed(seed, "generations"); }

std::vector<Production> cap_productions(std::span<const Production> productions,
                                        std::size_t cap, std::uint64_t seed) {
  if (productions.size() <= cap) return {productions.begin(), productions.end()};
  std::vector<std::size_t> order(productions.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(cap);
  std::sort(order.begin(), order.end());
  std::vector<Production> out;
  out.reserve(cap);
  for (std::size_t i : order) out.push_back(productions[i]);
  return out;
}

namespace {

std::vector<ProbeFeature> prepare_all(std::span<const Production> productions,
                                      ProbeKind probe, const ProbeOptions& options) {
  std::vector<ProbeFeature> features;
  features.reserve(productions.size());
  for (const auto& p : productions) features.push_back(ProbeFeature::prepare(p, probe, options));
  return features;
}

}  // namespace

std::vector<double> pairwise_distances(std::span<const Production> productions,
                                       ProbeKind probe, const ProbeOptions& options) {
  const auto features = prepare_all(productions, probe, options);
  std::vector<double> out;
  const std::size_t m = features.size();
  out.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) out.push_back(feature_distance(features[i], features[j]));
  }
  return out;
}

std::vector<double> cross_distances(std::span<const Production> left,
                                    std::span<const Production> right, ProbeKind probe,
                                    const ProbeOptions& options) {
  const auto fl = prepare_all(left, probe, options);
  const auto fr = prepare_all(right, probe, options);
  std::vector<double> out;
  out.reserve(fl.size() * fr.size());
  for (const auto& a : fl) {
    for (const auto& b : fr) out.push_back(feature_distance(a, b));
  }
  return out;
}

ScalarSampleSet self_variability(std::span<const Production> productions, ProbeKind probe,
                                 std::size_t cap, std::uint64_t seed, SampleKind kind,
                                 const ProbeOptions& options) {
  if (cap < 2) throw ValidationError("cap must be at least 2", {}, "cap");
  if (productions.size() < 2) {
    throw InsufficientDataError("self-variability needs at least 2 productions, got " +
                                std::to_string(productions.size()));
  }
  const auto chosen = cap_productions(productions, cap, seed);
  ScalarSampleSet set;
  set.values = pairwise_distances(chosen, probe, options);
  set.kind = kind;
  set.probe = probe;
  return set;
}

ScalarSampleSet self_variability(std::span<const Production> productions, ProbeKind probe,
                                 const SamplingCaps& caps, SampleKind kind,
                                 const ProbeOptions& options) {
  caps.validate();
  const bool model = kind == SampleKind::SelfModel;
  return self_variability(productions, probe, model ? caps.max_generations : caps.max_humans,
                          model ? model_side_seed(caps.seed) : human_side_seed(caps.seed),
                          kind, options);
}

ScalarSampleSet cross_variability(std::span<const Production> humans,
                                  std::span<const Production> generations, ProbeKind probe,
                                  const SamplingCaps& caps, const ProbeOptions& options) {
  caps.validate();
  if (humans.empty() || generations.empty()) {
    throw InsufficientDataError("cross-variability needs productions on both sides");
  }
  const auto h = cap_productions(humans, caps.max_humans, human_side_seed(caps.seed));
  const auto g = cap_productions(generations, caps.max_generations, model_side_seed(caps.seed));
  ScalarSampleSet set;
  set.values = cross_distances(g, h, probe, options);
  set.kind = SampleKind::Cross;
  set.probe = probe;
  return set;
}

}  // namespace varcal
