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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varcal/corpus.hpp"
#include "varcal/probes.hpp"

namespace varcal {

enum class SampleKind { SelfHuman, SelfModel, Cross, ControlHalf };

std::string_view to_string(SampleKind kind) noexcept;

/// Empirical distribution of probe distances for one instance: a
/// realization of H_k(x), M_k(x), C_k(x) or a control half.
struct ScalarSampleSet {
  std::vector<double> values;
  SampleKind kind = SampleKind::SelfHuman;
  ProbeKind probe = ProbeKind::semantic();
  std::string instance_id;

  double mean() const;
};

/// How many productions enter the pairwise comparison per side.
struct SamplingCaps {
  std::size_t max_humans = 10;
  std::size_t max_generations = 10;
  std::uint64_t seed = 0;

  /// Throws ValidationError unless both caps are >= 2.
  void validate() const;
};

/// Per-instance seed derived from the global seed and the instance id, so
/// results do not depend on iteration order.
std::uint64_t instance_seed(std::uint64_t global_seed, std::string_view instance_id);

/// Seeds for the human and model side subsamples of one instance. The same
/// human subset feeds both the self and the cross estimate.
std::uint64_t human_side_seed(std::uint64_t instance_seed);
std::uint64_t model_side_seed(std::uint64_t instance_seed);

/// Seeded subsample of at most `cap` productions, in original order. The
/// input is returned unchanged when it already fits.
std::vector<Production> cap_productions(std::span<const Production> productions,
                                        std::size_t cap, std::uint64_t seed);

/// Distances for all unordered pairs i < j after capping. Throws
/// InsufficientDataError with fewer than two productions and
/// MissingAnnotationError when a production lacks the probe's annotation.
ScalarSampleSet self_variability(std::span<const Production> productions,
                                 ProbeKind probe, std::size_t cap,
                                 std::uint64_t seed, SampleKind kind,
                                 const ProbeOptions& options = {});

/// Picks the cap and side seed from `caps` for human or model productions.
ScalarSampleSet self_variability(std::span<const Production> productions,
                                 ProbeKind probe, const SamplingCaps& caps,
                                 SampleKind kind, const ProbeOptions& options = {});

/// Full generation x human cross product after capping each side.
ScalarSampleSet cross_variability(std::span<const Production> humans,
                                  std::span<const Production> generations,
                                  ProbeKind probe, const SamplingCaps& caps,
                                  const ProbeOptions& options = {});

/// Uncapped pairwise distances, for callers that already selected the
/// productions.
std::vector<double> pairwise_distances(std::span<const Production> productions,
                                       ProbeKind probe,
                                       const ProbeOptions& options = {});
std::vector<double> cross_distances(std::span<const Production> left,
                                    std::span<const Production> right,
                                    ProbeKind probe,
                                    const ProbeOptions& options = {});

}  // namespace varcal
