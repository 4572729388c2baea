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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varcal/corpus.hpp"
#include "varcal/divergence.hpp"
#include "varcal/probes.hpp"

namespace varcal {

using Distribution = std::vector<double>;

/// Tolerance for probability vectors summing to one.
inline constexpr double kProbabilityTolerance = 1e-9;

/// Throws ValidationError unless p is nonnegative, finite and sums to 1.
void validate_distribution(std::span<const double> p);

/// q_i proportional to p_i^(1/tau). Throws std::invalid_argument if tau <= 0.
Distribution apply_temperature(std::span<const double> p, double tau);

/// Keeps the k most probable entries (ties to the lower index).
Distribution truncate_top_k(std::span<const double> p, std::size_t k);

/// Keeps the smallest most-probable prefix whose mass reaches top_p.
Distribution truncate_nucleus(std::span<const double> p, double top_p);

/// Locally typical truncation: ranks tokens by |surprisal - entropy| (nats)
/// and keeps the smallest prefix of that ranking whose mass reaches tau.
Distribution truncate_typical(std::span<const double> p, double tau);

enum class DecoderKind { Ancestral, Temperature, TopK, Nucleus, Typical };

class DecoderConfig {
 public:
  static DecoderConfig ancestral() noexcept { return {DecoderKind::Ancestral, 0.0}; }
  static DecoderConfig temperature(double tau);
  static DecoderConfig top_k(std::size_t k);
  static DecoderConfig nucleus(double top_p);
  static DecoderConfig typical(double tau);

  /// Labels as used for decoder settings: "ancestral", "temperature05",
  /// "temperature075", "top_k_40", "nucleus_085", "typical_02". Digit
  /// strings with a leading zero read as a decimal fraction ("085" is 0.85).
  /// Plain decimals ("nucleus_0.85", "temperature_1.5") are accepted too.
  static DecoderConfig parse(std::string_view label);

  DecoderKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  std::string label() const;

  Distribution apply(std::span<const double> p) const;

 private:
  DecoderConfig(DecoderKind kind, double parameter) noexcept
      : kind_(kind), parameter_(parameter) {}

  DecoderKind kind_;
  double parameter_;
};

/// A finite sequence distribution given by explicit next-token tables.
///
/// Rows are keyed by the prefix of emitted tokens joined with
/// kPrefixSeparator ("" is the empty prefix). A prefix without a row uses
/// the default row when one is set. Once a prefix reaches max_len tokens the
/// end token is forced, so every process is finitely enumerable.
class CategoricalProcess {
 public:
  static constexpr char kPrefixSeparator = '|';
  static constexpr std::string_view kDefaultEndToken = "</s>";

  CategoricalProcess(std::vector<std::string> vocab, std::string end_token,
                     std::size_t max_len);

  /// Loads {"vocab", "end_token"?, "max_len"?, "next_token": {prefix: [p]},
  /// "default"?, "pos"?: {token: tag}}.
  static CategoricalProcess from_json_text(std::string_view json_text);
  static CategoricalProcess load(const std::filesystem::path& path);

  void set_row(std::span<const std::string> prefix, Distribution p);
  void set_row(std::string_view prefix_key, Distribution p);
  void set_default_row(Distribution p);
  void set_pos_tag(const std::string& token, std::string tag);

  const std::vector<std::string>& vocab() const noexcept { return vocab_; }
  std::size_t end_index() const noexcept { return end_index_; }
  std::size_t max_len() const noexcept { return max_len_; }
  std::size_t token_index(std::string_view token) const;

  /// Untransformed next-token distribution after `prefix` (token indices).
  Distribution next(std::span<const std::size_t> prefix) const;

  /// Tags tokens through the "pos" map; nullopt unless every token maps.
  std::optional<std::vector<std::string>> tag(std::span<const std::string> tokens) const;

  static std::string prefix_key(std::span<const std::string> tokens);

 private:
  std::vector<std::string> vocab_;
  std::size_t end_index_;
  std::size_t max_len_;
  std::map<std::string, Distribution, std::less<>> rows_;
  std::optional<Distribution> default_row_;
  std::map<std::string, std::string, std::less<>> pos_;
};

/// Embeddings for simulated sequences, keyed by prefix_key of the tokens.
using EmbeddingTable = std::map<std::string, std::vector<double>, std::less<>>;

/// Builds a production from emitted tokens: text is the space-joined
/// tokens; pos_tags and embedding are filled when available.
Production make_production(const CategoricalProcess& process,
                           std::vector<std::string> tokens,
                           const EmbeddingTable* embeddings = nullptr);

/// Draws `count` sequences from the decoder-transformed process.
std::vector<Production> ancestral_sample(const CategoricalProcess& process,
                                         const DecoderConfig& decoder,
                                         std::uint64_t seed, std::size_t count,
                                         const EmbeddingTable* embeddings = nullptr);

struct WeightedSequence {
  std::vector<std::string> tokens;
  double probability;
};

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

/// Every positive-probability sequence of the transformed process. Throws
/// BudgetExceededError when more than `budget` prefixes would be expanded.
std::vector<WeightedSequence> enumerate_sequences(
    const CategoricalProcess& process, const DecoderConfig& decoder,
    std::size_t budget = kDefaultEnumerationBudget);

struct ExactDistanceDistribution {
  double mean = 0.0;
  /// Atoms sorted by distance, equal distances merged.
  std::vector<WeightedPoint> atoms;
};

struct ProcessSpec {
  const CategoricalProcess* process;
  DecoderConfig decoder;
  const EmbeddingTable* embeddings = nullptr;
};

/// Exact law of k(Y_a, Y_b) for independent Y_a, Y_b.
ExactDistanceDistribution exact_expected_distance(
    const ProcessSpec& a, const ProcessSpec& b, ProbeKind probe,
    std::size_t budget = kDefaultEnumerationBudget);

/// Exact E[W1] between self-variability sets of two independent i.i.d.
/// halves of sizes floor(n/2) and ceil(n/2) drawn from one process. This is
/// the expected human-control value for n productions per instance.
double exact_control_expectation(const ProcessSpec& process, ProbeKind probe,
                                 std::size_t n_productions,
                                 std::size_t budget = kDefaultEnumerationBudget);

/// `n_pairs` independent (a, b) draws and their probe distances.
std::vector<double> sample_pair_distances(const ProcessSpec& a, const ProcessSpec& b,
                                          ProbeKind probe, std::size_t n_pairs,
                                          std::uint64_t seed);

struct SyntheticCorpusSpec {
  ProcessSpec human;
  ProcessSpec model;
  std::size_t instances = 200;
  std::size_t humans_per_instance = 10;
  std::size_t generations_per_instance = 10;
  std::string run_label = "model";
  std::string task_name = "synthetic";
};

/// Corpus whose humans and generations are drawn i.i.d. per instance.
Corpus simulate_corpus(const SyntheticCorpusSpec& spec, std::uint64_t seed);

}  // namespace varcal
