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

#include "varcal/control.hpp"

#include <limits>

#include "parallel.hpp"
#include "varcal/divergence.hpp"
#include "varcal/error.hpp"
#include "varcal/estimators.hpp"
#include "varcal/seeding.hpp"

namespace varcal {

ControlRecord control_divergence(const Instance& instance, ProbeKind probe, std::uint64_t seed,
                                 const ProbeOptions& options) {
  if (instance.humans.size() < 4) {
    throw InsufficientDataError("instance '" + instance.id + "' has " +
                                std::to_string(instance.humans.size()) +
                                " human productions, too few to create a control group");
  }
  const auto [left, right] = disjoint_split(instance.humans, seed);
  const auto a = pairwise_distances(left, probe, options);
  const auto b = pairwise_distances(right, probe, options);
  ControlRecord rec;
  rec.instance_id = instance.id;
  rec.probe = probe;
  rec.w1 = wasserstein_1(a, b);
  rec.half_sizes = {left.size(), right.size()};
  rec.seed = seed;
  return rec;
}

ControlResult corpus_control(const Corpus& corpus, ProbeKind probe, std::uint64_t seed,
                             std::size_t repeats, const ProbeOptions& options,
                             unsigned threads) {
  if (repeats == 0) throw ValidationError("must be positive", {}, "repeats");

  struct Slot {
    std::optional<ControlRecord> record;
    std::optional<SkippedInstance> skipped;
  };
  std::vector<Slot> slots(corpus.instances.size());

  detail::parallel_for(corpus.instances.size(), threads, [&](std::size_t i) {
    const Instance& inst = corpus.instances[i];
    const std::uint64_t base = instance_seed(seed, inst.id);
    try {
      ControlRecord rec;
      double total = 0.0;
      for (std::size_t r = 0; r < repeats; ++r) {
        // The first split uses the instance seed itself so a single-repeat
        // record can be reproduced with control_divergence(inst, probe, seed).
        const std::uint64_t s = r == 0 ? base : derive_seed(base, static_cast<std::uint64_t>(r));
        rec = control_divergence(inst, probe, s, options);
        total += rec.w1;
      }
      rec.w1 = total / static_cast<double>(repeats);
      rec.seed = base;
      rec.repeats = repeats;
      slots[i].record = std::move(rec);
    } catch (const InsufficientDataError& e) {
      slots[i].skipped = SkippedInstance{inst.id, probe.name(), e.what()};
    } catch (const ValidationError& e) {
      slots[i].skipped = SkippedInstance{inst.id, probe.name(), e.what()};
    }
  });

  ControlResult result;
  for (auto& slot : slots) {
    if (slot.record) result.records.push_back(std::move(*slot.record));
    if (slot.skipped) result.skipped.push_back(std::move(*slot.skipped));
  }
  return result;
}

}  // namespace varcal
