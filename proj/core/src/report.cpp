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

#include "varcal/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "varcal/error.hpp"
#include "varcal/reference_tables.hpp"

namespace varcal {

using nlohmann::json;

EvaluationResult evaluate_corpus(const Corpus& corpus, std::string_view run_label,
                                 std::span<const ProbeKind> probes,
                                 const EvaluationOptions& options) {
  options.caps.validate();
  const bool known = std::any_of(corpus.instances.begin(), corpus.instances.end(),
                                 [&](const Instance& inst) {
                                   return inst.generations.find(std::string(run_label)) !=
                                          inst.generations.end();
                                 });
  if (!known) {
    throw ValidationError("unknown run label '" + std::string(run_label) + "'", {}, "run");
  }

  struct Slot {
    std::vector<InstanceDivergenceRecord> records;
    std::vector<SkippedInstance> skipped;
  };
  std::vector<Slot> slots(corpus.instances.size());
  const std::string label(run_label);

  detail::parallel_for(corpus.instances.size(), options.threads, [&](std::size_t idx) {
    const Instance& inst = corpus.instances[idx];
    Slot& slot = slots[idx];
    auto gens = inst.generations.find(label);
    if (gens == inst.generations.end()) {
      for (const auto& probe : probes) {
        slot.skipped.push_back({inst.id, probe.name(), "no generations for run '" + label + "'"});
      }
      return;
    }
    SamplingCaps caps = options.caps;
    caps.seed = instance_seed(options.caps.seed, inst.id);
    for (const auto& probe : probes) {
      try {
        auto human = self_variability(inst.humans, probe, caps, SampleKind::SelfHuman,
                                      options.probe_options);
        auto model = self_variability(gens->second, probe, caps, SampleKind::SelfModel,
                                      options.probe_options);
        auto cross = cross_variability(inst.humans, gens->second, probe, caps,
                                       options.probe_options);
        human.instance_id = model.instance_id = cross.instance_id = inst.id;

        InstanceDivergenceRecord rec;
        rec.instance_id = inst.id;
        rec.run_label = label;
        rec.probe = probe;
        rec.w1_self = wasserstein_1(model, human);
        rec.w1_cross = wasserstein_1(cross, human);
        rec.mu_self = mean_difference(model, human);
        rec.mu_cross = mean_difference(cross, human);
        rec.n_human_pairs = human.values.size();
        rec.n_model_pairs = model.values.size();
        rec.n_cross_pairs = cross.values.size();
        slot.records.push_back(std::move(rec));
      } catch (const InsufficientDataError& e) {
        slot.skipped.push_back({inst.id, probe.name(), e.what()});
      } catch (const ValidationError& e) {
        slot.skipped.push_back({inst.id, probe.name(), e.what()});
      }
    }
  });

  EvaluationResult result;
  for (auto& slot : slots) {
    std::move(slot.records.begin(), slot.records.end(), std::back_inserter(result.records));
    std::move(slot.skipped.begin(), slot.skipped.end(), std::back_inserter(result.skipped));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Flagging

std::string_view to_string(DivergenceKind kind) noexcept {
  return kind == DivergenceKind::W1Self ? "w1_self" : "w1_cross";
}

DivergenceKind parse_divergence_kind(std::string_view name) {
  if (name == "w1_self") return DivergenceKind::W1Self;
  if (name == "w1_cross") return DivergenceKind::W1Cross;
  throw ValidationError("unknown divergence '" + std::string(name) +
                            "' (expected w1_self or w1_cross)",
                        {}, "divergence");
}

FlagPolicy FlagPolicy::default_policy(FlagMode mode) {
  FlagPolicy policy;
  policy.mode = mode;
  for (auto kind : {DivergenceKind::W1Self, DivergenceKind::W1Cross}) {
    policy.thresholds[{ProbeKind::lexical(1), kind}] = 0.3;
    policy.thresholds[{ProbeKind::syntactic(2), kind}] = 0.2;
    policy.thresholds[{ProbeKind::semantic(), kind}] = 0.2;
  }
  return policy;
}

void FlagPolicy::validate() const {
  if (thresholds.empty()) throw ValidationError("policy has no thresholds", {}, "thresholds");
  for (const auto& [key, cutoff] : thresholds) {
    if (!(cutoff > 0.0 && cutoff <= 1.0)) {
      throw ValidationError("cutoff for " + key.first.name() + "/" +
                                std::string(to_string(key.second)) + " must lie in (0, 1]",
                            {}, "thresholds");
    }
  }
}

FlagPolicy FlagPolicy::from_json_text(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), {}, "policy");
  }
  FlagPolicy policy;
  if (auto m = j.find("mode"); m != j.end()) {
    const auto mode = m->is_string() ? m->get<std::string>() : "";
    if (mode == "any") {
      policy.mode = FlagMode::Any;
    } else if (mode == "all") {
      policy.mode = FlagMode::All;
    } else {
      throw ValidationError("expected \"any\" or \"all\"", {}, "mode");
    }
  }
  auto t = j.find("thresholds");
  if (t == j.end() || !t->is_array()) throw ValidationError("missing array", {}, "thresholds");
  for (const auto& entry : *t) {
    if (!entry.is_object() || !entry.contains("probe") || !entry.contains("cutoff") ||
        !entry["probe"].is_string() || !entry["cutoff"].is_number()) {
      throw ValidationError("entries need \"probe\" and \"cutoff\"", {}, "thresholds");
    }
    const auto probe = ProbeKind::parse(entry["probe"].get<std::string>());
    const auto cutoff = entry["cutoff"].get<double>();
    if (auto d = entry.find("divergence"); d != entry.end()) {
      if (!d->is_string()) throw ValidationError("expected a string", {}, "divergence");
      policy.thresholds[{probe, parse_divergence_kind(d->get<std::string>())}] = cutoff;
    } else {
      policy.thresholds[{probe, DivergenceKind::W1Self}] = cutoff;
      policy.thresholds[{probe, DivergenceKind::W1Cross}] = cutoff;
    }
  }
  policy.validate();
  return policy;
}

FlagPolicy FlagPolicy::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open policy file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string flag_name(DivergenceKind kind, ProbeKind probe) {
  return "high_" + std::string(to_string(kind)) + ":" + probe.name();
}

std::string flag_name_all(DivergenceKind kind) {
  return "high_" + std::string(to_string(kind)) + ":all";
}

namespace {

double value_of(const InstanceDivergenceRecord& r, DivergenceKind kind) {
  return kind == DivergenceKind::W1Self ? r.w1_self : r.w1_cross;
}

}  // namespace

std::vector<InstanceDivergenceRecord> flag_instances(std::vector<InstanceDivergenceRecord> records,
                                                     const FlagPolicy& policy) {
  policy.validate();
  for (const auto& [key, cutoff] : policy.thresholds) {
    const bool present = std::any_of(records.begin(), records.end(),
                                     [&](const auto& r) { return r.probe == key.first; });
    if (!present) {
      throw ValidationError("policy references probe " + key.first.name() +
                                " which no record carries",
                            {}, "policy");
    }
  }

  if (policy.mode == FlagMode::Any) {
    for (auto& r : records) {
      for (const auto& [key, cutoff] : policy.thresholds) {
        if (key.first == r.probe && value_of(r, key.second) > cutoff) {
          r.flags.insert(flag_name(key.second, r.probe));
        }
      }
    }
    return records;
  }

  // All: group by (instance, run).
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    groups[{records[i].instance_id, records[i].run_label}].push_back(i);
  }
  for (auto kind : {DivergenceKind::W1Self, DivergenceKind::W1Cross}) {
    std::vector<std::pair<ProbeKind, double>> referenced;
    for (const auto& [key, cutoff] : policy.thresholds) {
      if (key.second == kind) referenced.emplace_back(key.first, cutoff);
    }
    if (referenced.empty()) continue;
    for (const auto& [group, members] : groups) {
      const bool all_exceed = std::all_of(referenced.begin(), referenced.end(), [&](const auto& ref) {
        return std::any_of(members.begin(), members.end(), [&](std::size_t i) {
          return records[i].probe == ref.first && value_of(records[i], kind) > ref.second;
        });
      });
      if (all_exceed) {
        for (std::size_t i : members) records[i].flags.insert(flag_name_all(kind));
      }
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json record_json(const InstanceDivergenceRecord& r) {
  return {{"instance_id", r.instance_id},   {"run_label", r.run_label},
          {"probe", r.probe.name()},        {"w1_self", r.w1_self},
          {"w1_cross", r.w1_cross},         {"mu_self", r.mu_self},
          {"mu_cross", r.mu_cross},         {"n_human_pairs", r.n_human_pairs},
          {"n_model_pairs", r.n_model_pairs}, {"n_cross_pairs", r.n_cross_pairs},
          {"flags", r.flags}};
}

template <typename T>
T field(const json& j, const char* name, std::size_t line_no) {
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError("missing field", {}, name, line_no);
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ValidationError("wrong type", {}, name, line_no);
  }
}

}  // namespace

void write_records(std::span<const InstanceDivergenceRecord> records, std::ostream& out) {
  for (const auto& r : records) out << record_json(r).dump() << '\n';
}

std::vector<InstanceDivergenceRecord> read_records(std::istream& in) {
  std::vector<InstanceDivergenceRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed JSON: ") + e.what(), {}, {}, line_no);
    }
    InstanceDivergenceRecord r;
    r.instance_id = field<std::string>(j, "instance_id", line_no);
    r.run_label = field<std::string>(j, "run_label", line_no);
    r.probe = ProbeKind::parse(field<std::string>(j, "probe", line_no));
    r.w1_self = field<double>(j, "w1_self", line_no);
    r.w1_cross = field<double>(j, "w1_cross", line_no);
    r.mu_self = field<double>(j, "mu_self", line_no);
    r.mu_cross = field<double>(j, "mu_cross", line_no);
    r.n_human_pairs = field<std::size_t>(j, "n_human_pairs", line_no);
    r.n_model_pairs = field<std::size_t>(j, "n_model_pairs", line_no);
    r.n_cross_pairs = field<std::size_t>(j, "n_cross_pairs", line_no);
    if (j.contains("flags")) r.flags = field<std::set<std::string>>(j, "flags", line_no);
    for (double v : {r.w1_self, r.w1_cross, r.mu_self, r.mu_cross}) {
      if (!std::isfinite(v)) throw ValidationError("non-finite divergence", r.instance_id, {}, line_no);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<InstanceDivergenceRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open records file: " + path.string());
  return read_records(in);
}

void write_skipped(std::span<const SkippedInstance> skipped, std::ostream& out) {
  for (const auto& s : skipped) {
    out << json{{"instance_id", s.instance_id}, {"probe", s.probe}, {"reason", s.reason}}.dump()
        << '\n';
  }
}

void write_control_records(std::span<const ControlRecord> records, std::ostream& out) {
  for (const auto& r : records) {
    out << json{{"instance_id", r.instance_id},
                {"probe", r.probe.name()},
                {"w1", r.w1},
                {"half_sizes", {r.half_sizes.first, r.half_sizes.second}},
                {"seed", r.seed},
                {"repeats", r.repeats}}
               .dump()
        << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Summaries

std::vector<GroupSummary> summarize_records(std::span<const InstanceDivergenceRecord> records,
                                            double bin_width) {
  std::map<std::pair<std::string, ProbeKind>, std::vector<const InstanceDivergenceRecord*>> groups;
  for (const auto& r : records) groups[{r.run_label, r.probe}].push_back(&r);
  std::vector<GroupSummary> out;
  for (const auto& [key, members] : groups) {
    std::vector<DivergenceValue> self, cross;
    GroupSummary g;
    g.run_label = key.first;
    g.probe = key.second;
    for (const auto* r : members) {
      self.push_back({r->w1_self, r->mu_self, r->n_model_pairs, r->n_human_pairs});
      cross.push_back({r->w1_cross, r->mu_cross, r->n_cross_pairs, r->n_human_pairs});
      if (!r->flags.empty()) ++g.flagged;
    }
    g.self = summarize(self, bin_width);
    g.cross = summarize(cross, bin_width);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::string number(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

std::string optional_number(std::optional<double> v) { return v ? number(*v) : ""; }

std::string file_safe(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return out;
}

}  // namespace

void write_summary_csv(std::span<const GroupSummary> groups, std::ostream& out,
                       std::string_view task_name) {
  out << "run_label,probe,count,flagged";
  for (const char* metric : {"w1_self", "mu_self", "w1_cross", "mu_cross"}) {
    out << ',' << metric << "_mean," << metric << "_median," << metric << "_std";
  }
  if (!task_name.empty()) {
    out << ",reference_run_w1_self,reference_run_w1_cross,reference_control_w1_self,"
           "reference_control_w1_cross";
  }
  out << '\n';
  for (const auto& g : groups) {
    out << g.run_label << ',' << g.probe.name() << ',' << g.self.count << ',' << g.flagged;
    for (const auto* s : {&g.self.w1, &g.self.mu_diff, &g.cross.w1, &g.cross.mu_diff}) {
      out << ',' << number(s->mean) << ',' << number(s->median) << ',' << number(s->stddev);
    }
    if (!task_name.empty()) {
      out << ',' << optional_number(reference_value(task_name, g.run_label, g.probe, ReferenceTable::W1Self))
          << ',' << optional_number(reference_value(task_name, g.run_label, g.probe, ReferenceTable::W1Cross))
          << ',' << optional_number(reference_value(task_name, "human_control", g.probe, ReferenceTable::W1Self))
          << ',' << optional_number(reference_value(task_name, "human_control", g.probe, ReferenceTable::W1Cross));
    }
    out << '\n';
  }
}

void write_histogram_csv(const Histogram& histogram, std::ostream& out) {
  out << "bin_left,count\n";
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    out << number(histogram.bin_left(i)) << ',' << histogram.counts[i] << '\n';
  }
}

std::vector<std::filesystem::path> write_report(std::span<const InstanceDivergenceRecord> records,
                                                const std::filesystem::path& dir,
                                                std::string_view task_name, double bin_width) {
  if (records.empty()) throw ValidationError("no records to report", {}, "records");
  std::filesystem::create_directories(dir);
  const auto groups = summarize_records(records, bin_width);
  std::vector<std::filesystem::path> written;

  auto emit = [&](const std::filesystem::path& path, const std::string& content) {
    write_file_atomic(path, content);
    written.push_back(path);
  };

  std::ostringstream summary;
  write_summary_csv(groups, summary, task_name);
  emit(dir / "summary.csv", summary.str());

  for (const auto& g : groups) {
    const std::string stem = "hist_" + file_safe(g.run_label) + "_" + g.probe.name() + "_";
    const std::pair<const char*, const Histogram*> hists[] = {
        {"w1_self", &g.self.w1_histogram},
        {"mu_self", &g.self.mu_histogram},
        {"w1_cross", &g.cross.w1_histogram},
        {"mu_cross", &g.cross.mu_histogram},
    };
    for (const auto& [metric, hist] : hists) {
      std::ostringstream csv;
      write_histogram_csv(*hist, csv);
      emit(dir / (stem + metric + ".csv"), csv.str());
    }
  }

  json meta{{"bin_width", bin_width},
            {"w1_range", {0.0, 1.0}},
            {"mu_range", {-1.0, 1.0}},
            {"records", records.size()},
            {"groups", groups.size()}};
  if (!task_name.empty()) meta["task_name"] = task_name;
  emit(dir / "metadata.json", meta.dump(2) + "\n");
  return written;
}

}  // namespace varcal
