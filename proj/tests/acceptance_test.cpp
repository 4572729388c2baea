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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "varcal/control.hpp"
#include "varcal/divergence.hpp"
#include "varcal/probes.hpp"
#include "varcal/reference_tables.hpp"
#include "varcal/report.hpp"
#include "varcal/simulator.hpp"

using namespace varcal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CategoricalProcess one_step(std::vector<std::string> tokens, Distribution first) {
  tokens.push_back("</s>");
  first.push_back(0.0);
  CategoricalProcess p(tokens, "</s>", 10);
  p.set_row("", first);
  Distribution end(tokens.size(), 0.0);
  end.back() = 1.0;
  p.set_default_row(end);
  return p;
}

CategoricalProcess uniform(std::vector<std::string> tokens) {
  return one_step(tokens, Distribution(tokens.size(), 1.0 / static_cast<double>(tokens.size())));
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

Outcome w1_oracle() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_oracle = 0.0, worst_pairing = 0.0;
  std::size_t equal = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t na = size(rng);
    // Every other pair has equal sizes so both code paths are exercised.
    const std::size_t nb = t % 2 ? na : size(rng);
    std::vector<double> a(na), b(nb);
    for (auto& v : a) v = u(rng);
    for (auto& v : b) v = u(rng);
    const double w = wasserstein_1(a, b);
    worst_oracle = std::max(worst_oracle, std::fabs(w - oracle::transport_w1(a, b)));
    if (na == nb) {
      ++equal;
      worst_pairing = std::max(worst_pairing, std::fabs(w - wasserstein_1_sorted_pairing(a, b)));
    }
  }
  return {worst_oracle <= 1e-9 && worst_pairing <= 1e-12,
          "max |cdf - transport| " + fmt("%.2e", worst_oracle) + ", max |cdf - pairing| " +
              fmt("%.2e", worst_pairing) + " over " + std::to_string(equal) + " equal-size pairs"};
}

Outcome probe_properties() {
  std::mt19937_64 rng(2);
  std::size_t violations = 0;
  double worst = 0.0;
  auto prod = [](const std::vector<std::string>& t) {
    Production p{"t"};
    p.tokens = t;
    p.pos_tags = t;
    return p;
  };
  for (int t = 0; t < 10000; ++t) {
    const auto a = oracle::random_tokens(rng, 12, 5);
    const auto b = oracle::random_tokens(rng, 12, 5);
    const auto pa = prod(a), pb = prod(b);
    const int n = 1 + t % 3;
    for (auto probe : {ProbeKind::lexical(n), ProbeKind::syntactic(n)}) {
      const double ab = probe_distance(probe, pa, pb);
      const double ba = probe_distance(probe, pb, pa);
      if (ab != ba || ab < 0.0 || ab > 1.0 || probe_distance(probe, pa, pa) != 0.0) ++violations;
      worst = std::max(worst, std::fabs(ab - oracle::naive_ngram_distance(a, b, n)));
    }
  }
  return {violations == 0 && worst <= 1e-12,
          std::to_string(violations) + " property violations, max |multiset - naive| " +
              fmt("%.2e", worst)};
}

Outcome decoder_identities() {
  std::mt19937_64 rng(3);
  std::size_t broken = 0, near_ties = 0, low_temp_checked = 0;
  double worst_low_temp = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto p = oracle::random_distribution(rng, 1 + rng() % 30, 0.2);
    if (apply_temperature(p, 1.0) != p || truncate_top_k(p, p.size()) != p ||
        truncate_nucleus(p, 1.0) != p || truncate_typical(p, 1.0) != p) {
      ++broken;
    }
  }
  // The low-temperature gap to one-hot is about (p2/p1)^1000, so vectors
  // whose runner-up is within 2% of the leader are outside the tolerance
  // by construction; those are counted and skipped.
  while (low_temp_checked < 1000) {
    const auto p = oracle::random_distribution(rng, 2 + rng() % 30, 0.2);
    auto sorted = p;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted[1] > 0.98 * sorted[0]) {
      ++near_ties;
      continue;
    }
    ++low_temp_checked;
    const auto hot = apply_temperature(p, 1e-3);
    const auto greedy = truncate_top_k(p, 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      worst_low_temp = std::max(worst_low_temp, std::fabs(hot[i] - greedy[i]));
    }
  }
  return {broken == 0 && worst_low_temp <= 1e-6,
          std::to_string(broken) + " broken identities; tau=1e-3 vs top-1 max diff " +
              fmt("%.2e", worst_low_temp) + " (" + std::to_string(near_ties) +
              " near-tie vectors skipped)"};
}

Outcome estimator_convergence() {
  const auto proc = one_step({"a", "b", "c"}, {0.5, 0.3, 0.2});
  const ProbeKind probe = ProbeKind::lexical(1);
  bool pass = true;
  std::string detail;
  for (const char* label : {"ancestral", "nucleus_07", "top_k_2", "temperature05", "typical_02"}) {
    const ProcessSpec s{&proc, DecoderConfig::parse(label)};
    const double exact = exact_expected_distance(s, s, probe).mean;
    double worst = 0.0;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      worst = std::max(worst, std::fabs(mean_of(sample_pair_distances(s, s, probe, 10000, seed)) - exact));
    }
    pass &= worst < 0.01;
    detail += std::string(detail.empty() ? "" : "; ") + label + " exact " + fmt("%.5f", exact) +
              " max err " + fmt("%.4f", worst);
  }
  return {pass, detail};
}

double corpus_mean_mu_self(const ProcessSpec& human, const ProcessSpec& model, std::uint64_t seed) {
  const auto corpus = simulate_corpus({.human = human, .model = model, .instances = 200}, seed);
  const ProbeKind probe = ProbeKind::lexical(1);
  const auto res = evaluate_corpus(corpus, "model", std::span(&probe, 1), {.caps = {.seed = seed}});
  double sum = 0.0;
  for (const auto& r : res.records) sum += r.mu_self;
  return sum / static_cast<double>(res.records.size());
}

Outcome sign_semantics() {
  const auto two = uniform({"a", "b"});
  const auto four = uniform({"a", "b", "c", "d"});
  const ProcessSpec narrow{&two, DecoderConfig::ancestral()}, wide{&four, DecoderConfig::ancestral()};
  int positive = 0, negative = 0;
  std::string detail;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const double over = corpus_mean_mu_self(narrow, wide, seed);
    const double under = corpus_mean_mu_self(wide, narrow, seed);
    positive += over > 0.0;
    negative += under < 0.0;
    detail += std::string(detail.empty() ? "" : "; ") + "seed " + std::to_string(seed) + ": " +
              fmt("%+.4f", over) + " / swapped " + fmt("%+.4f", under);
  }
  return {positive == 3 && negative == 3, detail};
}

Outcome control_sanity() {
  const auto human_proc = one_step({"a", "b", "c"}, {0.5, 0.3, 0.2});
  const ProcessSpec human{&human_proc, DecoderConfig::ancestral()};
  // Mismatched model: greedy decoding of the human process, no variability.
  const ProcessSpec model{&human_proc, DecoderConfig::top_k(1)};
  const ProbeKind probe = ProbeKind::lexical(1);
  int below = 0;
  std::string detail;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto corpus = simulate_corpus({.human = human, .model = model, .instances = 200}, seed);
    const auto control = corpus_control(corpus, probe, seed);
    const auto eval = evaluate_corpus(corpus, "model", std::span(&probe, 1), {.caps = {.seed = seed}});
    double c = 0.0, m = 0.0;
    for (const auto& r : control.records) c += r.w1;
    for (const auto& r : eval.records) m += r.w1_self;
    c /= static_cast<double>(control.records.size());
    m /= static_cast<double>(eval.records.size());
    below += c < m;
    detail += "seed " + std::to_string(seed) + ": control " + fmt("%.4f", c) + " < model " +
              fmt("%.4f", m) + "; ";
  }
  // Identical productions everywhere.
  const auto det_proc = one_step({"same"}, {1.0});
  const ProcessSpec det{&det_proc, DecoderConfig::ancestral()};
  const auto flat = simulate_corpus({.human = det, .model = det, .instances = 200}, 4);
  double max_flat = 0.0;
  for (auto p : {probe, ProbeKind::syntactic(2)}) {
    for (const auto& r : corpus_control(flat, p, 4).records) max_flat = std::max(max_flat, r.w1);
  }
  detail += "identical productions: max control w1 " + fmt("%g", max_flat);
  return {below == 3 && max_flat == 0.0, detail};
}

Outcome flagging_fidelity() {
  const double levels[] = {0.19, 0.21, 0.29, 0.31};
  const ProbeKind probes[] = {ProbeKind::lexical(1), ProbeKind::syntactic(2), ProbeKind::semantic()};
  // Literal cutoffs for the three probes, in the order above.
  const double cutoff[] = {0.3, 0.2, 0.2};
  std::vector<InstanceDivergenceRecord> records;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        const int lv[] = {i, j, k};
        for (int p = 0; p < 3; ++p) {
          InstanceDivergenceRecord r;
          r.instance_id = std::to_string(i) + std::to_string(j) + std::to_string(k);
          r.run_label = "run";
          r.probe = probes[p];
          r.w1_self = levels[lv[p]];
          r.w1_cross = levels[3 - lv[p]];
          records.push_back(r);
        }
      }
    }
  }
  std::size_t mismatches = 0, any_flags = 0, all_flags = 0;
  const auto any = flag_instances(records, FlagPolicy::default_policy(FlagMode::Any));
  for (const auto& r : any) {
    const int p = r.probe == probes[0] ? 0 : r.probe == probes[1] ? 1 : 2;
    std::set<std::string> want;
    if (r.w1_self > cutoff[p]) want.insert("high_w1_self:" + r.probe.name());
    if (r.w1_cross > cutoff[p]) want.insert("high_w1_cross:" + r.probe.name());
    mismatches += r.flags != want;
    any_flags += r.flags.size();
  }
  const auto all = flag_instances(records, FlagPolicy::default_policy(FlagMode::All));
  for (std::size_t g = 0; g < all.size(); g += 3) {
    bool self_all = true, cross_all = true;
    for (int p = 0; p < 3; ++p) {
      self_all &= all[g + p].w1_self > cutoff[p];
      cross_all &= all[g + p].w1_cross > cutoff[p];
    }
    std::set<std::string> want;
    if (self_all) want.insert("high_w1_self:all");
    if (cross_all) want.insert("high_w1_cross:all");
    for (int p = 0; p < 3; ++p) mismatches += all[g + p].flags != want;
    all_flags += all[g].flags.size();
  }
  return {mismatches == 0 && any_flags > 0 && all_flags > 0,
          std::to_string(records.size()) + " records, " + std::to_string(mismatches) +
              " mismatches (" + std::to_string(any_flags) + " any-mode flags, " +
              std::to_string(all_flags) + " all-mode instance flags)"};
}

Outcome reference_tables() {
  struct Lookup {
    const char* task;
    const char* config;
    ProbeKind probe;
    double want;
  };
  const Lookup lookups[] = {
      {"Simplification", "human_control", ProbeKind::lexical(1), 0.042863},
      {"Translation", "opus-ancestral", ProbeKind::lexical(1), 0.250246},
      {"Open-Domain Dialogue", "ancestral", ProbeKind::semantic(), 0.112896},
  };
  bool pass = true;
  std::string detail;
  for (const auto& l : lookups) {
    const auto v = reference_value(l.task, l.config, l.probe, ReferenceTable::W1Self);
    pass &= v && *v == l.want;
    detail += std::string(detail.empty() ? "" : "; ") + l.task + "/" + l.config + " = " +
              (v ? fmt("%.6f", *v) : std::string("missing"));
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"w1-oracle-equivalence", 10.0, w1_oracle},
      {"probe-metric-properties", 10.0, probe_properties},
      {"decoder-identities", 0.0, decoder_identities},
      {"estimator-convergence", 0.0, estimator_convergence},
      {"sign-semantics", 0.0, sign_semantics},
      {"control-sanity", 0.0, control_sanity},
      {"flagging-fidelity", 0.0, flagging_fidelity},
      {"reference-table-integrity", 0.0, reference_tables},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    std::printf("%s %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    failures += !o.pass;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
