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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "varcal/probes.hpp"

namespace varcal {

/// Published corpus-level means for four tasks (Simplification,
/// Translation, Story Generation, Open-Domain Dialogue), bundled for
/// side-by-side display. Not a correctness target for user corpora.
enum class ReferenceTable {
  W1Self,   // mean W1(M(x), H(x))
  MuSelf,   // mean mu(M(x)) - mu(H(x))
  W1Cross,  // mean W1(C(x), H(x))
  MuCross,  // mean mu(C(x)) - mu(H(x))
};

struct ReferenceRow {
  ReferenceTable table;
  std::string_view task;
  /// Model/decoder label as published, e.g. "opus-nucleus_085" or
  /// "human_control".
  std::string_view label;
  /// lexical-1, syntactic-2 or semantic.
  std::string_view probe;
  /// NaN where no value was reported (dialogue control).
  double value;
};

std::span<const ReferenceRow> load_reference_tables();

/// Matches `config` against the full label first, then against the decoder
/// segment of "<model>-<decoder>[-<split>]" labels, so both
/// "dialogpt_large-ancestral-dev" and "ancestral" work for dialogue. Returns
/// nullopt when no row matches or the match is ambiguous.
std::optional<double> reference_value(std::string_view task, std::string_view config,
                                      ProbeKind probe, ReferenceTable table);

std::vector<std::string_view> reference_tasks();

}  // namespace varcal
