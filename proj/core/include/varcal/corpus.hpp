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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varcal {

/// One text output of a language process, human or model, with the
/// annotations probes consume. Annotations are optional per production;
/// probes that need a missing one fail instead of guessing.
struct Production {
  std::string text;
  std::optional<std::vector<std::string>> tokens;
  std::optional<std::vector<std::string>> pos_tags;
  std::optional<std::vector<double>> embedding;

  friend bool operator==(const Production&, const Production&) = default;
};

struct Instance {
  std::string id;
  std::string context;
  std::vector<Production> humans;
  /// Generation sets keyed by run label (e.g. "opus-ancestral").
  std::map<std::string, std::vector<Production>> generations;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Corpus {
  std::string task_name;
  std::optional<std::size_t> embedding_dim;
  std::vector<Instance> instances;

  const Instance* find(std::string_view id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Checks every corpus invariant; throws ValidationError naming the
/// offending instance and field. When embedding_dim is unset and some
/// production carries an embedding, the dimension is inferred from the
/// first one encountered.
void validate_corpus(Corpus& corpus);

/// Parses the line-delimited corpus format. An optional first line without
/// an "id" key is the header {"task_name", "embedding_dim"}. Blank lines are
/// ignored.
Corpus parse_corpus(std::istream& in);
Corpus load_corpus(const std::filesystem::path& path);

void write_corpus(const Corpus& corpus, std::ostream& out);
/// Writes through a temporary file and renames it into place.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// Merges tokenizer/tagger/encoder output keyed by (id, role, index) onto
/// the referenced productions. Role is "human" or a run label. A record
/// without "id" is the annotator header and may declare embedding_dim.
Corpus attach_annotations(Corpus corpus, std::istream& annotations);
Corpus attach_annotations(Corpus corpus,
                          const std::filesystem::path& annotations_path);

/// Seeded split into disjoint halves of sizes floor(n/2) and ceil(n/2).
/// Requires n >= 4 so that each half holds at least one pair.
std::pair<std::vector<Production>, std::vector<Production>> disjoint_split(
    std::span<const Production> productions, std::uint64_t seed);

/// Splits on Unicode whitespace without case folding. Only used when a
/// caller opts into the fallback tokenizer.
std::vector<std::string> whitespace_tokenize(std::string_view text);

}  // namespace varcal
