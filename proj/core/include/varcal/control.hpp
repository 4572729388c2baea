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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "varcal/corpus.hpp"
#include "varcal/probes.hpp"

namespace varcal {

/// Divergence between two disjoint halves of one instance's human
/// productions: the level of W1 a perfectly human-like generator attains.
struct ControlRecord {
  std::string instance_id;
  ProbeKind probe = ProbeKind::semantic();
  /// Mean over `repeats` splits.
  double w1 = 0.0;
  std::pair<std::size_t, std::size_t> half_sizes{0, 0};
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
};

/// Splits the humans with `seed` and compares self-variability of the two
/// halves. Throws InsufficientDataError with fewer than four humans.
ControlRecord control_divergence(const Instance& instance, ProbeKind probe,
                                 std::uint64_t seed,
                                 const ProbeOptions& options = {});

struct SkippedInstance {
  std::string instance_id;
  std::string probe;
  std::string reason;

  friend bool operator==(const SkippedInstance&, const SkippedInstance&) = default;
};

struct ControlResult {
  std::vector<ControlRecord> records;
  std::vector<SkippedInstance> skipped;
};

/// Control for every eligible instance. Each instance gets its own seed
/// derived from (seed, id); repeat r uses a further derived seed. Instances
/// with too few or under-annotated humans are skipped and listed.
ControlResult corpus_control(const Corpus& corpus, ProbeKind probe,
                             std::uint64_t seed, std::size_t repeats = 1,
                             const ProbeOptions& options = {},
                             unsigned threads = 0);

}  // namespace varcal
