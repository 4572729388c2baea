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

#include "varcal/simulator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "varcal/error.hpp"

namespace varcal {
namespace {

const ProbeKind kUnigram = ProbeKind::lexical(1);

void expect_vec_near(const Distribution& got, const Distribution& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

// One token from `first`, then end.
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

TEST(Temperature, Examples) {
  const Distribution p{0.8, 0.2};
  EXPECT_EQ(apply_temperature(p, 1.0), p);
  expect_vec_near(apply_temperature(Distribution{0.5, 0.5}, 0.3), {0.5, 0.5}, 1e-15);
  expect_vec_near(apply_temperature(p, 0.5), {0.64 / 0.68, 0.04 / 0.68}, 1e-12);
  EXPECT_EQ(apply_temperature(Distribution{0.0, 1.0}, 2.0)[0], 0.0);
  EXPECT_THROW(apply_temperature(p, 0.0), std::invalid_argument);
  EXPECT_THROW(apply_temperature(p, -1.0), std::invalid_argument);
}

TEST(TopK, Examples) {
  const Distribution p{0.5, 0.3, 0.2};
  EXPECT_EQ(truncate_top_k(p, 3), p);
  EXPECT_EQ(truncate_top_k(p, 10), p);
  expect_vec_near(truncate_top_k(p, 2), {0.625, 0.375, 0.0}, 1e-15);
  EXPECT_EQ(truncate_top_k(p, 1), (Distribution{1.0, 0.0, 0.0}));
  // Ties go to the lower index.
  EXPECT_EQ(truncate_top_k(Distribution{0.25, 0.5, 0.25}, 2), (Distribution{1.0 / 3, 2.0 / 3, 0.0}));
}

TEST(Nucleus, Examples) {
  const Distribution p{0.5, 0.3, 0.2};
  EXPECT_EQ(truncate_nucleus(p, 1.0), p);
  expect_vec_near(truncate_nucleus(p, 0.7), {0.625, 0.375, 0.0}, 1e-15);
  EXPECT_EQ(truncate_nucleus(p, 0.5), (Distribution{1.0, 0.0, 0.0}));
}

TEST(Typical, Examples) {
  const Distribution p{0.5, 0.3, 0.2};
  EXPECT_EQ(truncate_typical(p, 0.2), (Distribution{0.0, 1.0, 0.0}));
  EXPECT_EQ(truncate_typical(p, 0.95), p);
  EXPECT_EQ(truncate_typical(p, 1.0), p);
  EXPECT_EQ(truncate_typical(Distribution{0.0, 1.0, 0.0}, 0.2), (Distribution{0.0, 1.0, 0.0}));
  // Ranking: surprisal deviations from H = 1.0297 nats.
  const double h = -(0.5 * std::log(0.5) + 0.3 * std::log(0.3) + 0.2 * std::log(0.2));
  EXPECT_NEAR(h, 1.0297, 1e-4);
  EXPECT_NEAR(std::fabs(-std::log(0.3) - h), 0.174, 1e-3);
  // Token 2 (0.3) then token 1 (0.5): mass 0.8 at tau 0.5.
  expect_vec_near(truncate_typical(p, 0.5), {0.625, 0.375, 0.0}, 1e-15);
}

TEST(Transforms, ValidOutputAndZeroPreserving) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = oracle::random_distribution(rng, 2 + rng() % 12, 0.3);
    for (const auto& q : {apply_temperature(p, 0.3), apply_temperature(p, 2.5), truncate_top_k(p, 3),
                          truncate_nucleus(p, 0.6), truncate_typical(p, 0.4)}) {
      ASSERT_NO_THROW(validate_distribution(q));
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) ASSERT_EQ(q[i], 0.0);
      }
    }
  }
}

TEST(Transforms, IdentityParameters) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = oracle::random_distribution(rng, 1 + rng() % 20, 0.2);
    ASSERT_EQ(apply_temperature(p, 1.0), p);
    ASSERT_EQ(truncate_top_k(p, p.size()), p);
    ASSERT_EQ(truncate_nucleus(p, 1.0), p);
    ASSERT_EQ(truncate_typical(p, 1.0), p);
  }
}

TEST(Transforms, LowTemperatureApproachesArgmax) {
  // Needs a clear leader: the gap to one-hot decays like (p2/p1)^(1/tau).
  const Distribution p{0.1, 0.45, 0.40, 0.05};
  expect_vec_near(apply_temperature(p, 1e-3), truncate_top_k(p, 1), 1e-6);
}

TEST(DecoderConfig, ParseLabels) {
  EXPECT_EQ(DecoderConfig::parse("ancestral").kind(), DecoderKind::Ancestral);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("temperature05").parameter(), 0.5);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("temperature075").parameter(), 0.75);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("temperature_05").parameter(), 0.5);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("temperature_1.5").parameter(), 1.5);
  EXPECT_EQ(DecoderConfig::parse("top_k_40").parameter(), 40.0);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("nucleus_085").parameter(), 0.85);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("nucleus_09").parameter(), 0.9);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("nucleus_0.95").parameter(), 0.95);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("typical_02").parameter(), 0.2);
  EXPECT_DOUBLE_EQ(DecoderConfig::parse("typical_095").parameter(), 0.95);
  EXPECT_EQ(DecoderConfig::parse("nucleus_1").parameter(), 1.0);
}

TEST(DecoderConfig, LabelRoundTrip) {
  for (const char* label : {"ancestral", "temperature05", "temperature075", "top_k_30", "top_k_40",
                            "nucleus_085", "nucleus_09", "nucleus_095", "typical_02", "typical_095"}) {
    EXPECT_EQ(DecoderConfig::parse(label).label(), label);
  }
}

TEST(DecoderConfig, RejectsOutOfRange) {
  for (const char* label : {"nucleus_0", "nucleus_1.5", "typical_0", "top_k_0", "top_k_2.5",
                            "temperature_0", "temperature_-1", "greedy", "nucleus_", "nucleus_x"}) {
    EXPECT_THROW(DecoderConfig::parse(label), ValidationError) << label;
  }
  EXPECT_THROW(DecoderConfig::top_k(0), ValidationError);
  EXPECT_THROW(DecoderConfig::nucleus(0.0), ValidationError);
}

TEST(CategoricalProcess, LoadsJson) {
  const auto proc = CategoricalProcess::from_json_text(R"({
    "vocab": ["a", "b", "</s>"], "max_len": 3,
    "next_token": {"": [0.5, 0.5, 0.0], "a": {"b": 1.0}},
    "default": [0.0, 0.0, 1.0],
    "pos": {"a": "DT", "b": "NN"}
  })");
  EXPECT_EQ(proc.max_len(), 3u);
  EXPECT_EQ(proc.end_index(), 2u);
  const std::size_t a = proc.token_index("a");
  EXPECT_EQ(proc.next(std::vector<std::size_t>{a}), (Distribution{0.0, 1.0, 0.0}));
  EXPECT_EQ(proc.next(std::vector<std::size_t>{1}), (Distribution{0.0, 0.0, 1.0}));
  const auto seqs = enumerate_sequences(proc, DecoderConfig::ancestral());
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[0].tokens, (std::vector<std::string>{"a", "b"}));
  EXPECT_DOUBLE_EQ(seqs[0].probability, 0.5);
  EXPECT_EQ(proc.tag(seqs[0].tokens), (std::vector<std::string>{"DT", "NN"}));
}

TEST(CategoricalProcess, RejectsBadInput) {
  EXPECT_THROW(CategoricalProcess::from_json_text(R"({"vocab":["a","</s>"],"next_token":{"":[0.5,0.4]}})"),
               ValidationError);
  EXPECT_THROW(CategoricalProcess::from_json_text(R"({"vocab":["a","</s>"],"next_token":{"":{"z":1}}})"),
               ValidationError);
  EXPECT_THROW(CategoricalProcess::from_json_text(R"({"vocab":["a"]})"), ValidationError);
  EXPECT_THROW(CategoricalProcess::from_json_text(R"({"vocab":["a|b","</s>"]})"), ValidationError);
  EXPECT_THROW(CategoricalProcess::from_json_text("{"), ValidationError);
  CategoricalProcess proc({"a", "</s>"}, "</s>", 4);
  EXPECT_THROW(proc.next(std::vector<std::size_t>{}), ValidationError);
}

TEST(CategoricalProcess, MaxLenForcesEnd) {
  CategoricalProcess proc({"a", "</s>"}, "</s>", 3);
  proc.set_default_row({1.0, 0.0});
  const auto seqs = enumerate_sequences(proc, DecoderConfig::ancestral());
  ASSERT_EQ(seqs.size(), 1u);
  EXPECT_EQ(seqs[0].tokens.size(), 3u);
}

TEST(AncestralSample, Examples) {
  const auto det = one_step({"a"}, {1.0});
  for (const auto& p : ancestral_sample(det, DecoderConfig::ancestral(), 1, 20)) {
    EXPECT_EQ(p.tokens, std::vector<std::string>{"a"});
    EXPECT_EQ(p.text, "a");
  }

  const auto fair = one_step({"a", "b"}, {0.5, 0.5});
  const auto s = ancestral_sample(fair, DecoderConfig::ancestral(), 2024, 10000);
  const auto n_a = std::count_if(s.begin(), s.end(), [](const Production& p) { return p.text == "a"; });
  EXPECT_GE(n_a, 4900);
  EXPECT_LE(n_a, 5100);

  EXPECT_EQ(ancestral_sample(fair, DecoderConfig::ancestral(), 7, 50),
            ancestral_sample(fair, DecoderConfig::ancestral(), 7, 50));
}

TEST(AncestralSample, GreedyIsConstant) {
  CategoricalProcess proc({"a", "b", "c", "</s>"}, "</s>", 6);
  proc.set_row("", {0.2, 0.5, 0.3, 0.0});
  proc.set_default_row({0.3, 0.2, 0.1, 0.4});
  const auto s = ancestral_sample(proc, DecoderConfig::top_k(1), 3, 30);
  for (const auto& p : s) EXPECT_EQ(p, s.front());
  EXPECT_EQ(s.front().tokens, std::vector<std::string>{"b"});
}

TEST(EnumerateSequences, Examples) {
  EXPECT_EQ(enumerate_sequences(one_step({"a"}, {1.0}), DecoderConfig::ancestral()).size(), 1u);
  const auto fair = enumerate_sequences(one_step({"a", "b"}, {0.5, 0.5}), DecoderConfig::ancestral());
  ASSERT_EQ(fair.size(), 2u);
  EXPECT_EQ(fair[0].probability, 0.5);
  const auto nuc = enumerate_sequences(one_step({"a", "b", "c"}, {0.5, 0.3, 0.2}), DecoderConfig::nucleus(0.7));
  ASSERT_EQ(nuc.size(), 2u);
  EXPECT_NEAR(nuc[0].probability, 0.625, 1e-15);
  EXPECT_NEAR(nuc[1].probability, 0.375, 1e-15);
}

TEST(EnumerateSequences, SumsToOneAndRespectsBudget) {
  CategoricalProcess proc({"a", "b", "</s>"}, "</s>", 8);
  proc.set_default_row({0.4, 0.3, 0.3});
  const auto seqs = enumerate_sequences(proc, DecoderConfig::ancestral());
  double total = 0.0;
  for (const auto& s : seqs) total += s.probability;
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_EQ(seqs.size(), (1u << 9) - 1);
  EXPECT_THROW(enumerate_sequences(proc, DecoderConfig::ancestral(), 50), BudgetExceededError);
}

TEST(ExactExpectedDistance, Examples) {
  const auto det = one_step({"a"}, {1.0});
  const auto fair = one_step({"a", "b"}, {0.5, 0.5});
  const ProcessSpec d{&det, DecoderConfig::ancestral()}, f{&fair, DecoderConfig::ancestral()};

  auto r = exact_expected_distance(d, d, kUnigram);
  EXPECT_EQ(r.mean, 0.0);
  ASSERT_EQ(r.atoms.size(), 1u);
  EXPECT_EQ(r.atoms[0].value, 0.0);

  r = exact_expected_distance(f, f, kUnigram);
  EXPECT_DOUBLE_EQ(r.mean, 0.5);
  ASSERT_EQ(r.atoms.size(), 2u);
  EXPECT_DOUBLE_EQ(r.atoms[0].weight, 0.5);
  EXPECT_DOUBLE_EQ(r.atoms[1].weight, 0.5);

  // The vocabularies differ; tokens are compared by string.
  r = exact_expected_distance(f, d, kUnigram);
  EXPECT_DOUBLE_EQ(r.mean, 0.5);
}

// For single-token outputs the unigram distance is 0 on a match and 1
// otherwise, so E = 1 - sum q_i^2 over the transformed first row.
TEST(ExactExpectedDistance, BranchingProcessPerDecoder) {
  const auto proc = one_step({"a", "b", "c"}, {0.5, 0.3, 0.2});
  const std::map<std::string, double> expected{{"ancestral", 0.62},
                                               {"nucleus_07", 0.46875},
                                               {"top_k_2", 0.46875},
                                               {"temperature05", 0.5},
                                               {"typical_02", 0.0}};
  for (const auto& [label, want] : expected) {
    const ProcessSpec s{&proc, DecoderConfig::parse(label)};
    EXPECT_NEAR(exact_expected_distance(s, s, kUnigram).mean, want, 1e-12) << label;
  }
}

TEST(ExactExpectedDistance, SemanticNeedsEmbeddings) {
  const auto fair = one_step({"a", "b"}, {0.5, 0.5});
  ProcessSpec f{&fair, DecoderConfig::ancestral()};
  EXPECT_THROW(exact_expected_distance(f, f, ProbeKind::semantic()), ValidationError);
  const EmbeddingTable table{{"a", {1.0, 0.0}}, {"b", {0.0, 1.0}}};
  f.embeddings = &table;
  EXPECT_DOUBLE_EQ(exact_expected_distance(f, f, ProbeKind::semantic()).mean, 0.5);
}

TEST(MonteCarlo, ConvergesToExact) {
  const auto proc = one_step({"a", "b", "c"}, {0.5, 0.3, 0.2});
  for (const char* label : {"ancestral", "nucleus_07", "top_k_2", "temperature05", "typical_02"}) {
    const ProcessSpec s{&proc, DecoderConfig::parse(label)};
    const auto exact = exact_expected_distance(s, s, kUnigram);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto d = sample_pair_distances(s, s, kUnigram, 10000, seed);
      const double mc = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
      EXPECT_NEAR(mc, exact.mean, 0.01) << label << " seed " << seed;
      std::vector<WeightedPoint> sampled;
      for (double v : d) sampled.push_back({v, 1.0});
      EXPECT_LT(wasserstein_1_weighted(sampled, exact.atoms), 0.02) << label;
    }
  }
}

// Brute force over all ordered outcome tuples. The first floor(n/2) draws
// form one half; i.i.d. draws make this equivalent to a random split.
double brute_force_control(const std::vector<std::vector<std::string>>& outcomes,
                           const std::vector<double>& probs, std::size_t n) {
  std::vector<std::size_t> idx(n, 0);
  double expectation = 0.0;
  const std::size_t left = n / 2;
  while (true) {
    double p = 1.0;
    for (std::size_t i : idx) p *= probs[i];
    auto half = [&](std::size_t from, std::size_t to) {
      std::vector<double> d;
      for (std::size_t i = from; i < to; ++i) {
        for (std::size_t j = i + 1; j < to; ++j) {
          d.push_back(oracle::naive_ngram_distance(outcomes[idx[i]], outcomes[idx[j]], 1));
        }
      }
      return d;
    };
    expectation += p * oracle::transport_w1(half(0, left), half(left, n));
    std::size_t k = 0;
    while (k < n && ++idx[k] == outcomes.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return expectation;
}

TEST(ExactControlExpectation, MatchesBruteForce) {
  const auto proc = one_step({"a", "b", "c"}, {0.5, 0.3, 0.2});
  const ProcessSpec s{&proc, DecoderConfig::ancestral()};
  const std::vector<std::vector<std::string>> outcomes{{"a"}, {"b"}, {"c"}};
  for (std::size_t n : {4u, 5u, 6u, 8u}) {
    EXPECT_NEAR(exact_control_expectation(s, kUnigram, n),
                brute_force_control(outcomes, {0.5, 0.3, 0.2}, n), 1e-12)
        << "n = " << n;
  }
  EXPECT_THROW(exact_control_expectation(s, kUnigram, 3), InsufficientDataError);
}

TEST(SimulateCorpus, ShapeAndDeterminism) {
  const auto h = one_step({"a", "b"}, {0.5, 0.5});
  const auto m = one_step({"a", "b", "c", "d"}, {0.25, 0.25, 0.25, 0.25});
  SyntheticCorpusSpec spec{.human = {&h, DecoderConfig::ancestral()},
                           .model = {&m, DecoderConfig::ancestral()},
                           .instances = 5,
                           .humans_per_instance = 4,
                           .generations_per_instance = 3,
                           .run_label = "wide"};
  const auto c = simulate_corpus(spec, 9);
  ASSERT_EQ(c.instances.size(), 5u);
  EXPECT_EQ(c.instances[0].id, "syn-0");
  EXPECT_EQ(c.instances[0].humans.size(), 4u);
  EXPECT_EQ(c.instances[0].generations.at("wide").size(), 3u);
  EXPECT_EQ(simulate_corpus(spec, 9), c);
}

}  // namespace
}  // namespace varcal
