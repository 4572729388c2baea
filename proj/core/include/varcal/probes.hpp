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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "varcal/corpus.hpp"

namespace varcal {

enum class ProbeFamily { Lexical, Syntactic, Semantic };

/// Which distance a probe computes. Lexical and syntactic probes carry an
/// n-gram order in 1..3; semantic probes have order 0.
class ProbeKind {
 public:
  static ProbeKind lexical(int n);
  static ProbeKind syntactic(int n);
  static ProbeKind semantic() noexcept { return ProbeKind{ProbeFamily::Semantic, 0}; }

  /// Accepts "lexical-1".."lexical-3", "syntactic-1".."syntactic-3",
  /// "semantic". Throws ValidationError otherwise.
  static ProbeKind parse(std::string_view name);

  ProbeFamily family() const noexcept { return family_; }
  int order() const noexcept { return order_; }
  std::string name() const;

  friend auto operator<=>(const ProbeKind&, const ProbeKind&) = default;

 private:
  ProbeKind(ProbeFamily family, int order) noexcept : family_(family), order_(order) {}

  ProbeFamily family_;
  int order_;
};

/// Unigram, POS-bigram and cosine distance.
std::vector<ProbeKind> default_probes();

/// Comma-separated probe names.
std::vector<ProbeKind> parse_probe_list(std::string_view list);

using NGram = std::vector<std::string>;

struct NGramMultiset {
  std::map<NGram, std::size_t> counts;
  std::size_t total = 0;
};

/// All contiguous n-grams; empty when tokens.size() < n.
NGramMultiset ngram_multiset(std::span<const std::string> tokens, int n);

/// Non-matching occurrences over total occurrences, i.e. one minus the
/// multiset Dice coefficient. Both empty gives 0, exactly one empty gives 1.
double multiset_distance(const NGramMultiset& a, const NGramMultiset& b);

struct ProbeOptions {
  /// Tokenize text on whitespace when a production has no tokens.
  bool fallback_tokenizer = false;
};

double lexical_distance(const Production& p, const Production& q, int n,
                        const ProbeOptions& options = {});
double syntactic_distance(const Production& p, const Production& q, int n);
double semantic_distance(const Production& p, const Production& q);

struct CosineDistance {
  double raw;      // in [0, 2]
  double clamped;  // in [0, 1]
};

/// Throws ValidationError on dimension mismatch or a zero-norm vector.
CosineDistance cosine_distance(std::span<const double> a, std::span<const double> b);

/// True if the production carries what the probe needs.
bool has_required_annotations(const Production& p, ProbeKind probe,
                              const ProbeOptions& options = {});

/// Precomputed per-production input to a probe: the n-gram multiset for
/// lexical/syntactic probes, the embedding for the semantic probe. Pairwise
/// workloads prepare each production once.
class ProbeFeature {
 public:
  static ProbeFeature prepare(const Production& p, ProbeKind probe,
                              const ProbeOptions& options = {});

  ProbeKind probe() const noexcept { return probe_; }

  friend double feature_distance(const ProbeFeature& a, const ProbeFeature& b);

 private:
  struct Embedding {
    std::vector<double> values;
  };

  ProbeFeature(ProbeKind probe, std::variant<NGramMultiset, Embedding> data)
      : probe_(probe), data_(std::move(data)) {}

  ProbeKind probe_;
  std::variant<NGramMultiset, Embedding> data_;
};

double feature_distance(const ProbeFeature& a, const ProbeFeature& b);

/// Dispatches on the probe kind.
double probe_distance(ProbeKind probe, const Production& p, const Production& q,
                      const ProbeOptions& options = {});

}  // namespace varcal
