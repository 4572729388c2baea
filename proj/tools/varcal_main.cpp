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

// varcal command-line tool.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 runtime failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "varcal/control.hpp"
#include "varcal/corpus.hpp"
#include "varcal/error.hpp"
#include "varcal/report.hpp"
#include "varcal/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace varcal;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

// Writes to `path` atomically, or to stdout when path is empty or "-".
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  write_file_atomic(path, content);
}

Corpus read_corpus(const std::string& path, const std::string& annotations) {
  Corpus corpus = load_corpus(path);
  if (!annotations.empty()) corpus = attach_annotations(std::move(corpus), fs::path(annotations));
  return corpus;
}

void report_skipped(const std::vector<SkippedInstance>& skipped, const std::string& path) {
  if (!path.empty()) {
    std::ostringstream out;
    write_skipped(skipped, out);
    emit(path, out.str());
  }
  if (!skipped.empty()) {
    std::cerr << "varcal: skipped " << skipped.size() << " (instance, probe) pairs";
    if (path.empty()) std::cerr << "; pass --skipped <file> for the list";
    std::cerr << "\n";
  }
}

struct CommonCorpusArgs {
  std::string corpus;
  std::string annotations;
  std::string probes = "lexical-1,syntactic-2,semantic";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool fallback_tokenizer = false;
  std::string out;
  std::string skipped;
};

void add_common(CLI::App* cmd, CommonCorpusArgs& a) {
  cmd->add_option("corpus", a.corpus, "Corpus JSONL file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--annotations", a.annotations, "Annotations JSONL to merge first")
      ->check(CLI::ExistingFile);
  cmd->add_option("--probes", a.probes, "Comma-separated probes")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Global seed")->capture_default_str();
  cmd->add_option("--threads", a.threads, "Worker threads (0: all cores)")->capture_default_str();
  cmd->add_flag("--fallback-tokenizer", a.fallback_tokenizer,
                "Split text on whitespace when tokens are missing");
  cmd->add_option("--out", a.out, "Output file (default stdout)");
  cmd->add_option("--skipped", a.skipped, "Write skipped instances here");
}

int run_validate(const std::string& path, const std::string& annotations) {
  const Corpus corpus = read_corpus(path, annotations);
  std::set<std::string> runs;
  std::size_t humans = 0, generations = 0;
  for (const auto& inst : corpus.instances) {
    humans += inst.humans.size();
    for (const auto& [label, gens] : inst.generations) {
      runs.insert(label);
      generations += gens.size();
    }
  }
  std::cout << "ok: " << corpus.instances.size() << " instances, " << humans << " human and "
            << generations << " generated productions";
  if (!corpus.task_name.empty()) std::cout << ", task " << corpus.task_name;
  std::cout << "\nruns:";
  for (const auto& r : runs) std::cout << ' ' << r;
  std::cout << "\n";
  return 0;
}

int run_evaluate(const CommonCorpusArgs& a, const std::string& run, std::size_t max_humans,
                 std::size_t max_generations, bool flag, const std::string& policy_path) {
  const Corpus corpus = read_corpus(a.corpus, a.annotations);
  const auto probes = parse_probe_list(a.probes);
  EvaluationOptions opts;
  opts.caps = {max_humans, max_generations, a.seed};
  opts.probe_options.fallback_tokenizer = a.fallback_tokenizer;
  opts.threads = a.threads;
  auto result = evaluate_corpus(corpus, run, probes, opts);
  if (flag) {
    const auto policy = policy_path.empty() ? FlagPolicy::default_policy() : FlagPolicy::load(policy_path);
    result.records = flag_instances(std::move(result.records), policy);
  }
  std::ostringstream out;
  write_records(result.records, out);
  emit(a.out, out.str());
  report_skipped(result.skipped, a.skipped);
  return 0;
}

int run_control(const CommonCorpusArgs& a, std::size_t repeats) {
  const Corpus corpus = read_corpus(a.corpus, a.annotations);
  ProbeOptions options{.fallback_tokenizer = a.fallback_tokenizer};
  std::vector<ControlRecord> records;
  std::vector<SkippedInstance> skipped;
  for (const auto& probe : parse_probe_list(a.probes)) {
    auto res = corpus_control(corpus, probe, a.seed, repeats, options, a.threads);
    records.insert(records.end(), res.records.begin(), res.records.end());
    skipped.insert(skipped.end(), res.skipped.begin(), res.skipped.end());
  }
  std::ostringstream out;
  write_control_records(records, out);
  emit(a.out, out.str());
  report_skipped(skipped, a.skipped);
  return 0;
}

int run_flag(const std::string& report, const std::string& policy_path,
             const std::optional<std::string>& mode, const std::string& out_path) {
  auto policy = policy_path.empty() ? FlagPolicy::default_policy() : FlagPolicy::load(policy_path);
  if (mode) policy.mode = *mode == "all" ? FlagMode::All : FlagMode::Any;
  auto records = load_records(report);
  for (auto& r : records) r.flags.clear();
  records = flag_instances(std::move(records), policy);
  std::ostringstream out;
  write_records(records, out);
  emit(out_path, out.str());
  std::size_t flagged = 0;
  for (const auto& r : records) flagged += !r.flags.empty();
  std::cerr << "varcal: " << flagged << " of " << records.size() << " records flagged\n";
  return 0;
}

struct SimulateArgs {
  std::string process;
  std::string decoder = "ancestral";
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t instances = 0;
  std::string human_process;
  std::string human_decoder = "ancestral";
  std::size_t humans = 10;
  std::string run_label = "model";
  std::string task = "synthetic";
};

int run_simulate(const SimulateArgs& a) {
  const auto model = CategoricalProcess::load(a.process);
  const auto decoder = DecoderConfig::parse(a.decoder);
  std::ostringstream out;
  if (a.instances == 0) {
    for (const auto& p : ancestral_sample(model, decoder, a.seed, a.samples)) {
      json j{{"text", p.text}, {"tokens", *p.tokens}};
      if (p.pos_tags) j["pos_tags"] = *p.pos_tags;
      out << j.dump() << "\n";
    }
  } else {
    if (a.human_process.empty()) {
      throw ValidationError("--instances needs --human-process", {}, "human-process");
    }
    const auto human = CategoricalProcess::load(a.human_process);
    SyntheticCorpusSpec spec{.human = {&human, DecoderConfig::parse(a.human_decoder)},
                             .model = {&model, decoder},
                             .instances = a.instances,
                             .humans_per_instance = a.humans,
                             .generations_per_instance = a.samples,
                             .run_label = a.run_label,
                             .task_name = a.task};
    write_corpus(simulate_corpus(spec, a.seed), out);
  }
  emit(a.out, out.str());
  return 0;
}

int run_oracle(const std::string& path_a, const std::string& path_b, const std::string& probe_name,
               const std::string& decoder_a, const std::string& decoder_b, std::size_t budget) {
  const auto a = CategoricalProcess::load(path_a);
  const auto b = CategoricalProcess::load(path_b);
  const auto probe = ProbeKind::parse(probe_name);
  const auto exact = exact_expected_distance({&a, DecoderConfig::parse(decoder_a)},
                                             {&b, DecoderConfig::parse(decoder_b)}, probe, budget);
  json atoms = json::array();
  for (const auto& atom : exact.atoms) {
    atoms.push_back({{"distance", atom.value}, {"probability", atom.weight}});
  }
  json j{{"probe", probe.name()}, {"mean", exact.mean}, {"distribution", atoms}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_report(const std::vector<std::string>& inputs, const std::string& dir,
               const std::string& task, double bin_width) {
  std::vector<InstanceDivergenceRecord> records;
  for (const auto& path : inputs) {
    auto part = load_records(path);
    records.insert(records.end(), part.begin(), part.end());
  }
  for (const auto& p : write_report(records, dir, task, bin_width)) std::cout << p.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calibration of generators to human production variability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "varcal 0.1.0");

  std::string validate_corpus_path, validate_annotations;
  auto* validate = app.add_subcommand("validate", "Check a corpus (and optional annotations)");
  validate->add_option("corpus", validate_corpus_path)->required()->check(CLI::ExistingFile);
  validate->add_option("--annotations", validate_annotations)->check(CLI::ExistingFile);

  std::string merge_corpus, merge_annotations, merge_out;
  auto* merge = app.add_subcommand("annotate-merge", "Attach an annotations file to a corpus");
  merge->add_option("corpus", merge_corpus)->required()->check(CLI::ExistingFile);
  merge->add_option("annotations", merge_annotations)->required()->check(CLI::ExistingFile);
  merge->add_option("--out", merge_out, "Output corpus (default stdout)");

  CommonCorpusArgs eval_args;
  std::string run_label, policy_path;
  std::size_t max_humans = 10, max_generations = 10;
  bool eval_flag = false;
  auto* evaluate = app.add_subcommand("evaluate", "Per-instance divergences for one run");
  add_common(evaluate, eval_args);
  evaluate->add_option("--run", run_label, "Generation run label")->required();
  evaluate->add_option("--max-humans", max_humans)->capture_default_str();
  evaluate->add_option("--max-generations", max_generations)->capture_default_str();
  evaluate->add_flag("--flag", eval_flag, "Apply the flag policy to the output");
  evaluate->add_option("--policy", policy_path, "Flag policy JSON")->check(CLI::ExistingFile);

  CommonCorpusArgs control_args;
  std::size_t repeats = 1;
  auto* control = app.add_subcommand("control", "Human control divergences");
  add_common(control, control_args);
  control->add_option("--repeats", repeats, "Splits averaged per instance")->capture_default_str();

  std::string flag_report, flag_policy, flag_out;
  std::optional<std::string> flag_mode;
  auto* flag = app.add_subcommand("flag", "Flag records above divergence cutoffs");
  flag->add_option("report", flag_report, "Records JSONL")->required()->check(CLI::ExistingFile);
  flag->add_option("--policy", flag_policy, "Flag policy JSON")->check(CLI::ExistingFile);
  flag->add_option("--mode", flag_mode, "Override the policy mode")->check(CLI::IsMember({"any", "all"}));
  flag->add_option("--out", flag_out, "Output file (default stdout)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Sample from a categorical process");
  simulate->add_option("process", sim.process, "Process JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--decoder", sim.decoder)->capture_default_str();
  simulate->add_option("--samples", sim.samples, "Samples (generations per instance with --instances)")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--out", sim.out, "Output file (default stdout)");
  simulate->add_option("--instances", sim.instances, "Write a synthetic corpus with this many instances");
  simulate->add_option("--human-process", sim.human_process, "Process for human productions")
      ->check(CLI::ExistingFile);
  simulate->add_option("--human-decoder", sim.human_decoder)->capture_default_str();
  simulate->add_option("--humans", sim.humans, "Human productions per instance")->capture_default_str();
  simulate->add_option("--run-label", sim.run_label)->capture_default_str();
  simulate->add_option("--task", sim.task)->capture_default_str();

  std::string oracle_a, oracle_b, oracle_probe, decoder_a = "ancestral", decoder_b = "ancestral";
  std::size_t budget = kDefaultEnumerationBudget;
  auto* oracle = app.add_subcommand("oracle", "Exact pairwise distance law between two processes");
  oracle->add_option("process_a", oracle_a)->required()->check(CLI::ExistingFile);
  oracle->add_option("process_b", oracle_b)->required()->check(CLI::ExistingFile);
  oracle->add_option("--probe", oracle_probe)->required();
  oracle->add_option("--decoder-a", decoder_a)->capture_default_str();
  oracle->add_option("--decoder-b", decoder_b)->capture_default_str();
  oracle->add_option("--budget", budget, "Enumeration budget")->capture_default_str();

  std::vector<std::string> report_inputs;
  std::string report_dir, report_task;
  double bin_width = kDefaultBinWidth;
  auto* report = app.add_subcommand("report", "Summary and histogram CSVs from records");
  report->add_option("records", report_inputs, "Records JSONL files")->required()->check(CLI::ExistingFile);
  report->add_option("--out", report_dir, "Output directory")->required();
  report->add_option("--task", report_task, "Task name for reference columns");
  report->add_option("--bin-width", bin_width)->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*validate) return run_validate(validate_corpus_path, validate_annotations);
    if (*merge) {
      const Corpus merged = attach_annotations(load_corpus(merge_corpus), fs::path(merge_annotations));
      std::ostringstream out;
      write_corpus(merged, out);
      emit(merge_out, out.str());
      return 0;
    }
    if (*evaluate) {
      return run_evaluate(eval_args, run_label, max_humans, max_generations, eval_flag, policy_path);
    }
    if (*control) return run_control(control_args, repeats);
    if (*flag) return run_flag(flag_report, flag_policy, flag_mode, flag_out);
    if (*simulate) return run_simulate(sim);
    if (*oracle) return run_oracle(oracle_a, oracle_b, oracle_probe, decoder_a, decoder_b, budget);
    if (*report) return run_report(report_inputs, report_dir, report_task, bin_width);
  } catch (const ValidationError& e) {
    std::cerr << "varcal: invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "varcal: error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}
