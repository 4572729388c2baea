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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varcal/control.hpp"
#include "varcal/corpus.hpp"
#include "varcal/divergence.hpp"
#include "varcal/estimators.hpp"
#include "varcal/probes.hpp"

namespace varcal {

/// Per (instance, run, probe) divergences of model self-variability M and
/// cross-variability C from human variability H.
struct InstanceDivergenceRecord {
  std::string instance_id;
  std::string run_label;
  ProbeKind probe = ProbeKind::semantic();
  double w1_self = 0.0;   // W1(M, H)
  double w1_cross = 0.0;  // W1(C, H)
  double mu_self = 0.0;   // mean(M) - mean(H)
  double mu_cross = 0.0;  // mean(C) - mean(H)
  std::size_t n_human_pairs = 0;
  std::size_t n_model_pairs = 0;
  std::size_t n_cross_pairs = 0;
  std::set<std::string> flags;

  friend bool operator==(const InstanceDivergenceRecord&,
                         const InstanceDivergenceRecord&) = default;
};

struct EvaluationOptions {
  SamplingCaps caps;
  ProbeOptions probe_options;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct EvaluationResult {
  std::vector<InstanceDivergenceRecord> records;
  std::vector<SkippedInstance> skipped;
};

/// Records come out in corpus order, probes in the given order within an
/// instance. Instances lacking the run, enough productions or annotations
/// for a probe are listed in `skipped`. Throws ValidationError when no
/// instance has the run label.
EvaluationResult evaluate_corpus(const Corpus& corpus, std::string_view run_label,
                                 std::span<const ProbeKind> probes,
                                 const EvaluationOptions& options = {});

enum class DivergenceKind { W1Self, W1Cross };

std::string_view to_string(DivergenceKind kind) noexcept;
DivergenceKind parse_divergence_kind(std::string_view name);

enum class FlagMode { Any, All };

struct FlagPolicy {
  /// Strict cutoffs: a record is over the threshold when value > cutoff.
  std::map<std::pair<ProbeKind, DivergenceKind>, double> thresholds;
  FlagMode mode = FlagMode::Any;

  /// w1 > 0.3 for lexical-1 and > 0.2 for syntactic-2 and semantic, on
  /// both the self and the cross divergence.
  static FlagPolicy default_policy(FlagMode mode = FlagMode::Any);

  /// {"mode": "any"|"all", "thresholds": [{"probe", "divergence", "cutoff"}]}
  static FlagPolicy from_json_text(std::string_view json_text);
  static FlagPolicy load(const std::filesystem::path& path);

  /// Throws ValidationError unless every cutoff lies in (0, 1].
  void validate() const;
};

/// Flag name for one probe under mode Any, e.g. "high_w1_self:lexical-1".
std::string flag_name(DivergenceKind kind, ProbeKind probe);
/// Flag name under mode All, e.g. "high_w1_self:all".
std::string flag_name_all(DivergenceKind kind);

/// Any: flags each record whose divergence exceeds its probe's cutoff.
/// All: flags every record of an (instance, run) when all referenced probes
/// exceed their cutoffs. Throws ValidationError if the policy names a probe
/// no record carries.
std::vector<InstanceDivergenceRecord> flag_instances(
    std::vector<InstanceDivergenceRecord> records, const FlagPolicy& policy);

// Serialization: one JSON object per line.
void write_records(std::span<const InstanceDivergenceRecord> records, std::ostream& out);
std::vector<InstanceDivergenceRecord> read_records(std::istream& in);
std::vector<InstanceDivergenceRecord> load_records(const std::filesystem::path& path);
void write_skipped(std::span<const SkippedInstance> skipped, std::ostream& out);
void write_control_records(std::span<const ControlRecord> records, std::ostream& out);

/// Writes `content` to a sibling temp file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

struct GroupSummary {
  std::string run_label;
  ProbeKind probe = ProbeKind::semantic();
  DivergenceSummary self;   // w1_self / mu_self
  DivergenceSummary cross;  // w1_cross / mu_cross
  std::size_t flagged = 0;
};

/// Groups by (run_label, probe) in sorted order.
std::vector<GroupSummary> summarize_records(
    std::span<const InstanceDivergenceRecord> records,
    double bin_width = kDefaultBinWidth);

/// CSV with one row per group: counts and mean/median/std of every
/// divergence. When task_name names a bundled reference task, the row also
/// carries the reference human-control W1(M,H) for that probe.
void write_summary_csv(std::span<const GroupSummary> groups, std::ostream& out,
                       std::string_view task_name = {});

/// "bin_left,count" rows.
void write_histogram_csv(const Histogram& histogram, std::ostream& out);

/// summary.csv plus one histogram CSV per (run, probe, divergence) under
/// `dir`, named hist_<run>_<probe>_<w1_self|w1_cross|mu_self|mu_cross>.csv,
/// and metadata.json recording the bin width. Returns written paths.
std::vector<std::filesystem::path> write_report(
    std::span<const InstanceDivergenceRecord> records,
    const std::filesystem::path& dir, std::string_view task_name = {},
    double bin_width = kDefaultBinWidth);

}  // namespace varcal
