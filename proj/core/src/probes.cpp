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

#include "varcal/probes.hpp"

#include <algorithm>
#include <cmath>

#include "varcal/error.hpp"

namespace varcal {

namespace {

void check_order(int n) {
  if (n < 1 || n > 3) {
    throw ValidationError("n-gram order must be 1, 2 or 3, got " + std::to_string(n), {},
                          "probe");
  }
}

std::string describe(const Production& p) {
  constexpr std::size_t kMax = 40;
  std::string s = p.text.size() > kMax ? p.text.substr(0, kMax) + "..." : p.text;
  return "production \"" + s + "\"";
}

const std::vector<std::string>& require_tokens(const Production& p,
                                               const ProbeOptions& options,
                                               std::vector<std::string>& scratch) {
  if (p.tokens) return *p.tokens;
  if (options.fallback_tokenizer) {
    scratch = whitespace_tokenize(p.text);
    return scratch;
  }
  throw MissingAnnotationError(describe(p) + " has no tokens", {}, "tokens");
}

const std::vector<std::string>& require_tags(const Production& p) {
  if (!p.pos_tags) throw MissingAnnotationError(describe(p) + " has no pos_tags", {}, "pos_tags");
  return *p.pos_tags;
}

const std::vector<double>& require_embedding(const Production& p) {
  if (!p.embedding) {
    throw MissingAnnotationError(describe(p) + " has no embedding", {}, "embedding");
  }
  return *p.embedding;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

ProbeKind ProbeKind::lexical(int n) {
  check_order(n);
  return {ProbeFamily::Lexical, n};
}

ProbeKind ProbeKind::syntactic(int n) {
  check_order(n);
  return {ProbeFamily::Syntactic, n};
}

ProbeKind ProbeKind::parse(std::string_view name) {
  if (name == "semantic") return semantic();
  auto with_order = [&](std::string_view prefix) -> int {
    if (name.size() != prefix.size() + 1 || name.substr(0, prefix.size()) != prefix) return 0;
    const char c = name.back();
    return (c >= '1' && c <= '3') ? c - '0' : 0;
  };
  if (int n = with_order("lexical-")) return lexical(n);
  if (int n = with_order("syntactic-")) return syntactic(n);
  throw ValidationError("unknown probe '" + std::string(name) +
                            "' (expected lexical-{1,2,3}, syntactic-{1,2,3} or semantic)",
                        {}, "probe");
}

std::string ProbeKind::name() const {
  switch (family_) {
    case ProbeFamily::Lexical:
      return "lexical-" + std::to_string(order_);
    case ProbeFamily::Syntactic:
      return "syntactic-" + std::to_string(order_);
    case ProbeFamily::Semantic:
      break;
  }
  return "semantic";
}

std::vector<ProbeKind> default_probes() {
  return {ProbeKind::lexical(1), ProbeKind::syntactic(2), ProbeKind::semantic()};
}

std::vector<ProbeKind> parse_probe_list(std::string_view list) {
  std::vector<ProbeKind> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    auto item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto probe = ProbeKind::parse(item);
      if (std::find(out.begin(), out.end(), probe) == out.end()) out.push_back(probe);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ValidationError("empty probe list", {}, "probes");
  return out;
}

NGramMultiset ngram_multiset(std::span<const std::string> tokens, int n) {
  NGramMultiset ms;
  if (n < 1) return ms;
  const auto order = static_cast<std::size_t>(n);
  if (tokens.size() < order) return ms;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    ++ms.counts[NGram(tokens.begin() + i, tokens.begin() + i + order)];
  }
  ms.total = tokens.size() - order + 1;
  return ms;
}

double multiset_distance(const NGramMultiset& a, const NGramMultiset& b) {
  const std::size_t sum = a.total + b.total;
  if (sum == 0) return 0.0;
  if (a.total == 0 || b.total == 0) return 1.0;
  // Both maps are sorted by key: merge-walk for the shared occurrences.
  std::size_t match = 0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() && ib != b.counts.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      match += std::min(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(sum - 2 * match) / static_cast<double>(sum);
}

double lexical_distance(const Production& p, const Production& q, int n,
                        const ProbeOptions& options) {
  check_order(n);
  std::vector<std::string> sp, sq;
  const auto& tp = require_tokens(p, options, sp);
  const auto& tq = require_tokens(q, options, sq);
  return multiset_distance(ngram_multiset(tp, n), ngram_multiset(tq, n));
}

double syntactic_distance(const Production& p, const Production& q, int n) {
  check_order(n);
  return multiset_distance(ngram_multiset(require_tags(p), n),
                           ngram_multiset(require_tags(q), n));
}

CosineDistance cosine_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("embedding dimension mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()),
                          {}, "embedding");
  }
  const double aa = dot(a, a);
  const double bb = dot(b, b);
  if (aa == 0.0 || bb == 0.0) throw ValidationError("zero-norm embedding", {}, "embedding");
  // sqrt(aa * aa) == aa exactly, so identical vectors give exactly 0.
  const double raw = 1.0 - dot(a, b) / std::sqrt(aa * bb);
  return {raw, std::clamp(raw, 0.0, 1.0)};
}

double semantic_distance(const Production& p, const Production& q) {
  return cosine_distance(require_embedding(p), require_embedding(q)).clamped;
}

bool has_required_annotations(const Production& p, ProbeKind probe,
                              const ProbeOptions& options) {
  switch (probe.family()) {
    case ProbeFamily::Lexical:
      return p.tokens.has_value() || options.fallback_tokenizer;
    case ProbeFamily::Syntactic:
      return p.pos_tags.has_value();
    case ProbeFamily::Semantic:
      return p.embedding.has_value();
  }
  return false;
}

ProbeFeature ProbeFeature::prepare(const Production& p, ProbeKind probe,
                                   const ProbeOptions& options) {
  switch (probe.family()) {
    case ProbeFamily::Lexical: {
      std::vector<std::string> scratch;
      return {probe, ngram_multiset(require_tokens(p, options, scratch), probe.order())};
    }
    case ProbeFamily::Syntactic:
      return {probe, ngram_multiset(require_tags(p), probe.order())};
    case ProbeFamily::Semantic:
      break;
  }
  const auto& e = require_embedding(p);
  if (dot(e, e) == 0.0) throw ValidationError(describe(p) + " has a zero-norm embedding", {}, "embedding");
  return {probe, Embedding{e}};
}

double feature_distance(const ProbeFeature& a, const ProbeFeature& b) {
  if (a.probe_ != b.probe_) {
    throw std::invalid_argument("feature_distance: mismatched probes " + a.probe_.name() +
                                " and " + b.probe_.name());
  }
  if (const auto* ea = std::get_if<ProbeFeature::Embedding>(&a.data_)) {
    return cosine_distance(ea->values, std::get<ProbeFeature::Embedding>(b.data_).values).clamped;
  }
  return multiset_distance(std::get<NGramMultiset>(a.data_), std::get<NGramMultiset>(b.data_));
}

double probe_distance(ProbeKind probe, const Production& p, const Production& q,
                      const ProbeOptions& options) {
  switch (probe.family()) {
    case ProbeFamily::Lexical:
      return lexical_distance(p, q, probe.order(), options);
    case ProbeFamily::Syntactic:
      return syntactic_distance(p, q, probe.order());
    case ProbeFamily::Semantic:
      break;
  }
  return semantic_distance(p, q);
}

}  // namespace varcal
