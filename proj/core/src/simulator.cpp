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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "varcal/error.hpp"
#include "varcal/estimators.hpp"
#include "varcal/seeding.hpp"

namespace varcal {

using nlohmann::json;

void validate_distribution(std::span<const double> p) {
  if (p.empty()) throw ValidationError("empty probability vector", {}, "distribution");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("entries must be finite and nonnegative", {}, "distribution");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw ValidationError("entries sum to " + std::to_string(sum) + ", not 1", {},
                          "distribution");
  }
}

namespace {

// Zeroes everything outside `keep` and renormalizes the kept mass.
Distribution keep_only(std::span<const double> p, std::span<const std::size_t> keep) {
  Distribution q(p.size(), 0.0);
  double mass = 0.0;
  for (std::size_t i : keep) mass += p[i];
  if (!(mass > 0.0)) throw ValidationError("no probability mass left after truncation", {}, "distribution");
  for (std::size_t i : keep) q[i] = p[i] / mass;
  return q;
}

// Indices sorted by descending probability, ties to the lower index.
std::vector<std::size_t> by_probability(std::span<const double> p) {
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  return idx;
}

// Smallest prefix of `ranked` whose mass reaches `target`; zero-mass
// entries are never kept.
std::vector<std::size_t> mass_prefix(std::span<const double> p, std::span<const std::size_t> ranked,
                                     double target) {
  constexpr double kSlack = 1e-12;
  std::vector<std::size_t> keep;
  double cum = 0.0;
  for (std::size_t i : ranked) {
    if (p[i] <= 0.0) continue;
    keep.push_back(i);
    cum += p[i];
    if (cum >= target - kSlack) break;
  }
  return keep;
}

}  // namespace

Distribution apply_temperature(std::span<const double> p, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("temperature must be positive, got " + std::to_string(tau));
  }
  if (tau == 1.0) return {p.begin(), p.end()};
  // Work in log space: p^(1/tau) underflows for small tau.
  double max_log = -std::numeric_limits<double>::infinity();
  for (double v : p) {
    if (v > 0.0) max_log = std::max(max_log, std::log(v) / tau);
  }
  if (!std::isfinite(max_log)) throw ValidationError("all-zero probability vector", {}, "distribution");
  Distribution q(p.size(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      q[i] = std::exp(std::log(p[i]) / tau - max_log);
      sum += q[i];
    }
  }
  for (double& v : q) v /= sum;
  return q;
}

Distribution truncate_top_k(std::span<const double> p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("top-k requires k >= 1");
  if (k >= p.size()) return {p.begin(), p.end()};
  auto ranked = by_probability(p);
  ranked.resize(k);
  return keep_only(p, ranked);
}

Distribution truncate_nucleus(std::span<const double> p, double top_p) {
  if (!(top_p > 0.0) || top_p > 1.0) {
    throw std::invalid_argument("nucleus requires top_p in (0, 1], got " + std::to_string(top_p));
  }
  if (top_p == 1.0) return {p.begin(), p.end()};
  const auto ranked = by_probability(p);
  return keep_only(p, mass_prefix(p, ranked, top_p));
}

Distribution truncate_typical(std::span<const double> p, double tau) {
  if (!(tau > 0.0) || tau > 1.0) {
    throw std::invalid_argument("typical sampling requires tau in (0, 1], got " + std::to_string(tau));
  }
  if (tau == 1.0) return {p.begin(), p.end()};
  double entropy = 0.0;  // nats, 0 ln 0 := 0
  for (double v : p) {
    if (v > 0.0) entropy -= v * std::log(v);
  }
  std::vector<std::size_t> ranked;
  std::vector<double> score(p.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      score[i] = std::abs(-std::log(p[i]) - entropy);
      ranked.push_back(i);
    }
  }
  if (ranked.empty()) throw ValidationError("all-zero probability vector", {}, "distribution");
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  return keep_only(p, mass_prefix(p, ranked, tau));
}

// ---------------------------------------------------------------------------
// DecoderConfig

DecoderConfig DecoderConfig::temperature(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ValidationError("temperature must be positive", {}, "decoder");
  }
  return {DecoderKind::Temperature, tau};
}

DecoderConfig DecoderConfig::top_k(std::size_t k) {
  if (k == 0) throw ValidationError("top-k requires k >= 1", {}, "decoder");
  return {DecoderKind::TopK, static_cast<double>(k)};
}

DecoderConfig DecoderConfig::nucleus(double top_p) {
  if (!(top_p > 0.0) || top_p > 1.0) throw ValidationError("nucleus requires p in (0, 1]", {}, "decoder");
  return {DecoderKind::Nucleus, top_p};
}

DecoderConfig DecoderConfig::typical(double tau) {
  if (!(tau > 0.0) || tau > 1.0) throw ValidationError("typical requires tau in (0, 1]", {}, "decoder");
  return {DecoderKind::Typical, tau};
}

namespace {

double parse_parameter(std::string_view digits, std::string_view label) {
  auto bad = [&] {
    return ValidationError("cannot read parameter of decoder label '" + std::string(label) + "'",
                           {}, "decoder");
  };
  if (digits.empty()) throw bad();
  std::string text(digits);
  if (text.find('.') == std::string::npos && text.size() > 1 && text[0] == '0') {
    text = "0." + text.substr(1);
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw bad();
    return v;
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string format_parameter(double v) {
  if (v > 0.0 && v < 1.0) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << v;
    std::string t = s.str();  // "0.850000"
    while (t.back() == '0') t.pop_back();
    return "0" + t.substr(2);
  }
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

DecoderConfig DecoderConfig::parse(std::string_view label) {
  auto strip = [&](std::string_view prefix, std::string_view& rest) {
    if (label.substr(0, prefix.size()) != prefix) return false;
    rest = label.substr(prefix.size());
    if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
    return true;
  };
  std::string_view rest;
  if (label == "ancestral") return ancestral();
  if (strip("temperature", rest)) return temperature(parse_parameter(rest, label));
  if (strip("top_k", rest)) {
    const double k = parse_parameter(rest, label);
    if (k < 1.0 || k != std::floor(k)) {
      throw ValidationError("top-k requires a positive integer", {}, "decoder");
    }
    return top_k(static_cast<std::size_t>(k));
  }
  if (strip("nucleus", rest)) return nucleus(parse_parameter(rest, label));
  if (strip("typical", rest)) return typical(parse_parameter(rest, label));
  throw ValidationError("unknown decoder label '" + std::string(label) + "'", {}, "decoder");
}

std::string DecoderConfig::label() const {
  switch (kind_) {
    case DecoderKind::Ancestral:
      return "ancestral";
    case DecoderKind::Temperature:
      return "temperature" + format_parameter(parameter_);
    case DecoderKind::TopK:
      return "top_k_" + std::to_string(static_cast<std::size_t>(parameter_));
    case DecoderKind::Nucleus:
      return "nucleus_" + format_parameter(parameter_);
    case DecoderKind::Typical:
      return "typical_" + format_parameter(parameter_);
  }
  return "unknown";
}

Distribution DecoderConfig::apply(std::span<const double> p) const {
  switch (kind_) {
    case DecoderKind::Ancestral:
      return {p.begin(), p.end()};
    case DecoderKind::Temperature:
      return apply_temperature(p, parameter_);
    case DecoderKind::TopK:
      return truncate_top_k(p, static_cast<std::size_t>(parameter_));
    case DecoderKind::Nucleus:
      return truncate_nucleus(p, parameter_);
    case DecoderKind::Typical:
      return truncate_typical(p, parameter_);
  }
  return {p.begin(), p.end()};
}

// ---------------------------------------------------------------------------
// CategoricalProcess

CategoricalProcess::CategoricalProcess(std::vector<std::string> vocab, std::string end_token,
                                       std::size_t max_len)
    : vocab_(std::move(vocab)), end_index_(0), max_len_(max_len) {
  if (max_len_ == 0) throw ValidationError("must be positive", {}, "max_len");
  std::set<std::string_view> seen;
  for (const auto& t : vocab_) {
    if (t.empty()) throw ValidationError("empty token", {}, "vocab");
    if (t.find(kPrefixSeparator) != std::string::npos) {
      throw ValidationError("token '" + t + "' contains the reserved separator '|'", {}, "vocab");
    }
    if (!seen.insert(t).second) throw ValidationError("duplicate token '" + t + "'", {}, "vocab");
  }
  auto it = std::find(vocab_.begin(), vocab_.end(), end_token);
  if (it == vocab_.end()) {
    throw ValidationError("end token '" + end_token + "' not in vocabulary", {}, "end_token");
  }
  end_index_ = static_cast<std::size_t>(it - vocab_.begin());
}

std::size_t CategoricalProcess::token_index(std::string_view token) const {
  auto it = std::find(vocab_.begin(), vocab_.end(), token);
  if (it == vocab_.end()) {
    throw ValidationError("unknown token '" + std::string(token) + "'", {}, "vocab");
  }
  return static_cast<std::size_t>(it - vocab_.begin());
}

std::string CategoricalProcess::prefix_key(std::span<const std::string> tokens) {
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) key += kPrefixSeparator;
    key += tokens[i];
  }
  return key;
}

void CategoricalProcess::set_row(std::string_view prefix_key, Distribution p) {
  if (p.size() != vocab_.size()) {
    throw ValidationError("row for prefix '" + std::string(prefix_key) + "' has " +
                              std::to_string(p.size()) + " entries, vocabulary has " +
                              std::to_string(vocab_.size()),
                          {}, "next_token");
  }
  validate_distribution(p);
  // Every token in the key must exist and must not be the end token.
  std::string_view rest = prefix_key;
  while (!rest.empty()) {
    const auto cut = rest.find(kPrefixSeparator);
    if (token_index(rest.substr(0, cut)) == end_index_) {
      throw ValidationError("prefix '" + std::string(prefix_key) + "' contains the end token", {},
                            "next_token");
    }
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  rows_.insert_or_assign(std::string(prefix_key), std::move(p));
}

void CategoricalProcess::set_row(std::span<const std::string> prefix, Distribution p) {
  set_row(prefix_key(prefix), std::move(p));
}

void CategoricalProcess::set_default_row(Distribution p) {
  if (p.size() != vocab_.size()) throw ValidationError("wrong length", {}, "default");
  validate_distribution(p);
  default_row_ = std::move(p);
}

void CategoricalProcess::set_pos_tag(const std::string& token, std::string tag) {
  token_index(token);
  pos_[token] = std::move(tag);
}

Distribution CategoricalProcess::next(std::span<const std::size_t> prefix) const {
  if (prefix.size() >= max_len_) {
    Distribution end(vocab_.size(), 0.0);
    end[end_index_] = 1.0;
    return end;
  }
  std::string key;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) key += kPrefixSeparator;
    key += vocab_.at(prefix[i]);
  }
  if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  if (default_row_) return *default_row_;
  throw ValidationError("no next-token row for prefix '" + key + "'", {}, "next_token");
}

std::optional<std::vector<std::string>> CategoricalProcess::tag(
    std::span<const std::string> tokens) const {
  if (pos_.empty()) return std::nullopt;
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto it = pos_.find(t);
    if (it == pos_.end()) return std::nullopt;
    tags.push_back(it->second);
  }
  return tags;
}

namespace {

Distribution read_row(const json& j, const CategoricalProcess& proc, const std::string& where) {
  if (j.is_array()) {
    Distribution p;
    for (const auto& v : j) {
      if (!v.is_number()) throw ValidationError("expected numbers", {}, where);
      p.push_back(v.get<double>());
    }
    return p;
  }
  if (j.is_object()) {
    Distribution p(proc.vocab().size(), 0.0);
    for (const auto& [token, v] : j.items()) {
      if (!v.is_number()) throw ValidationError("expected numbers", {}, where);
      p[proc.token_index(token)] = v.get<double>();
    }
    return p;
  }
  throw ValidationError("row must be an array or a token->probability object", {}, where);
}

}  // namespace

CategoricalProcess CategoricalProcess::from_json_text(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), {}, "process");
  }
  if (!j.is_object()) throw ValidationError("expected an object", {}, "process");
  if (!j.contains("vocab") || !j["vocab"].is_array()) {
    throw ValidationError("missing array", {}, "vocab");
  }
  std::vector<std::string> vocab;
  for (const auto& t : j["vocab"]) {
    if (!t.is_string()) throw ValidationError("expected strings", {}, "vocab");
    vocab.push_back(t.get<std::string>());
  }
  std::string end_token(kDefaultEndToken);
  if (auto it = j.find("end_token"); it != j.end()) {
    if (!it->is_string()) throw ValidationError("expected a string", {}, "end_token");
    end_token = it->get<std::string>();
  }
  std::size_t max_len = 100;
  if (auto it = j.find("max_len"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() <= 0) {
      throw ValidationError("must be a positive integer", {}, "max_len");
    }
    max_len = it->get<std::size_t>();
  }
  CategoricalProcess proc(std::move(vocab), std::move(end_token), max_len);
  if (auto it = j.find("next_token"); it != j.end()) {
    if (!it->is_object()) throw ValidationError("expected an object", {}, "next_token");
    for (const auto& [key, row] : it->items()) {
      proc.set_row(std::string_view(key), read_row(row, proc, "next_token"));
    }
  }
  if (auto it = j.find("default"); it != j.end() && !it->is_null()) {
    proc.set_default_row(read_row(*it, proc, "default"));
  }
  if (auto it = j.find("pos"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw ValidationError("expected an object", {}, "pos");
    for (const auto& [token, tag] : it->items()) {
      if (!tag.is_string()) throw ValidationError("expected strings", {}, "pos");
      proc.set_pos_tag(token, tag.get<std::string>());
    }
  }
  return proc;
}

CategoricalProcess CategoricalProcess::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open process file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

// ---------------------------------------------------------------------------
// Sampling and enumeration

Production make_production(const CategoricalProcess& process, std::vector<std::string> tokens,
                           const EmbeddingTable* embeddings) {
  Production p;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) p.text += ' ';
    p.text += tokens[i];
  }
  p.pos_tags = process.tag(tokens);
  if (embeddings) {
    if (auto it = embeddings->find(CategoricalProcess::prefix_key(tokens)); it != embeddings->end()) {
      p.embedding = it->second;
    }
  }
  p.tokens = std::move(tokens);
  return p;
}

std::vector<Production> ancestral_sample(const CategoricalProcess& process,
                                         const DecoderConfig& decoder, std::uint64_t seed,
                                         std::size_t count, const EmbeddingTable* embeddings) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Production> out;
  out.reserve(count);
  std::vector<std::size_t> prefix;
  for (std::size_t s = 0; s < count; ++s) {
    prefix.clear();
    while (true) {
      const Distribution q = decoder.apply(process.next(prefix));
      const double u = unit(rng);
      double cum = 0.0;
      std::size_t pick = q.size();
      std::size_t last_positive = q.size();
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] <= 0.0) continue;
        last_positive = i;
        cum += q[i];
        if (u < cum) {
          pick = i;
          break;
        }
      }
      if (pick == q.size()) pick = last_positive;  // rounding at the top end
      if (pick == process.end_index()) break;
      prefix.push_back(pick);
    }
    std::vector<std::string> tokens;
    tokens.reserve(prefix.size());
    for (std::size_t i : prefix) tokens.push_back(process.vocab()[i]);
    out.push_back(make_production(process, std::move(tokens), embeddings));
  }
  return out;
}

std::vector<WeightedSequence> enumerate_sequences(const CategoricalProcess& process,
                                                  const DecoderConfig& decoder,
                                                  std::size_t budget) {
  struct Node {
    std::vector<std::size_t> prefix;
    double probability;
  };
  std::vector<WeightedSequence> out;
  std::vector<Node> stack{{{}, 1.0}};
  std::size_t expanded = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++expanded > budget) {
      throw BudgetExceededError("enumeration exceeded the budget of " + std::to_string(budget) +
                                " prefixes");
    }
    const Distribution q = decoder.apply(process.next(node.prefix));
    // Push in reverse so sequences come out in vocabulary order.
    for (std::size_t i = q.size(); i-- > 0;) {
      if (q[i] <= 0.0) continue;
      const double prob = node.probability * q[i];
      if (i == process.end_index()) {
        std::vector<std::string> tokens;
        for (std::size_t t : node.prefix) tokens.push_back(process.vocab()[t]);
        out.push_back({std::move(tokens), prob});
      } else {
        auto prefix = node.prefix;
        prefix.push_back(i);
        stack.push_back({std::move(prefix), prob});
      }
    }
  }
  return out;
}

namespace {

struct Support {
  std::vector<ProbeFeature> features;
  std::vector<double> probabilities;
};

Support prepare_support(const ProcessSpec& spec, ProbeKind probe, std::size_t budget) {
  Support s;
  for (auto& seq : enumerate_sequences(*spec.process, spec.decoder, budget)) {
    const Production p = make_production(*spec.process, std::move(seq.tokens), spec.embeddings);
    try {
      s.features.push_back(ProbeFeature::prepare(p, probe));
    } catch (const MissingAnnotationError& e) {
      throw ValidationError(std::string(e.what()) +
                                " (syntactic probes need a pos map, semantic probes an embedding table)",
                            {}, "probe");
    }
    s.probabilities.push_back(seq.probability);
  }
  return s;
}

std::vector<std::vector<double>> distance_matrix(const Support& a, const Support& b) {
  std::vector<std::vector<double>> d(a.features.size(), std::vector<double>(b.features.size()));
  for (std::size_t i = 0; i < a.features.size(); ++i) {
    for (std::size_t j = 0; j < b.features.size(); ++j) d[i][j] = feature_distance(a.features[i], b.features[j]);
  }
  return d;
}

// All count vectors of length k summing to n, with their multinomial
// probabilities under p.
struct Composition {
  std::vector<std::size_t> counts;
  double probability;
};

void compositions(std::span<const double> p, std::size_t n, std::size_t budget,
                  std::vector<Composition>& out) {
  const std::size_t k = p.size();
  std::vector<std::size_t> counts(k, 0);
  std::vector<double> log_fact(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));

  auto recurse = [&](auto& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == k) {
      counts[pos] = left;
      double logp = log_fact[n];
      for (std::size_t i = 0; i < k; ++i) {
        if (counts[i] == 0) continue;
        if (p[i] <= 0.0) return;
        logp += static_cast<double>(counts[i]) * std::log(p[i]) - log_fact[counts[i]];
      }
      if (out.size() >= budget) throw BudgetExceededError("control expectation exceeded the budget");
      out.push_back({counts, std::exp(logp)});
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  recurse(recurse, 0, n);
}

std::vector<double> composition_pairs(const Composition& c, const std::vector<std::vector<double>>& d) {
  std::vector<double> values;
  const std::size_t k = c.counts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ci = c.counts[i];
    if (ci == 0) continue;
    values.insert(values.end(), ci * (ci - 1) / 2, d[i][i]);
    for (std::size_t j = i + 1; j < k; ++j) values.insert(values.end(), ci * c.counts[j], d[i][j]);
  }
  return values;
}

}  // namespace

ExactDistanceDistribution exact_expected_distance(const ProcessSpec& a, const ProcessSpec& b,
                                                  ProbeKind probe, std::size_t budget) {
  const Support sa = prepare_support(a, probe, budget);
  const Support sb = prepare_support(b, probe, budget);
  if (sa.features.size() * sb.features.size() > budget) {
    throw BudgetExceededError("pair enumeration exceeded the budget of " + std::to_string(budget));
  }
  std::map<double, double> atoms;
  for (std::size_t i = 0; i < sa.features.size(); ++i) {
    for (std::size_t j = 0; j < sb.features.size(); ++j) {
      atoms[feature_distance(sa.features[i], sb.features[j])] += sa.probabilities[i] * sb.probabilities[j];
    }
  }
  ExactDistanceDistribution out;
  for (const auto& [d, w] : atoms) {
    out.atoms.push_back({d, w});
    out.mean += d * w;
  }
  return out;
}

double exact_control_expectation(const ProcessSpec& process, ProbeKind probe,
                                 std::size_t n_productions, std::size_t budget) {
  if (n_productions < 4) {
    throw InsufficientDataError("control needs at least 4 productions, got " +
                                std::to_string(n_productions));
  }
  const Support s = prepare_support(process, probe, budget);
  const auto d = distance_matrix(s, s);
  const std::size_t left = n_productions / 2;
  const std::size_t right = n_productions - left;

  std::vector<Composition> cl, cr;
  compositions(s.probabilities, left, budget, cl);
  compositions(s.probabilities, right, budget, cr);
  if (cl.size() * cr.size() > budget) {
    throw BudgetExceededError("control expectation exceeded the budget of " + std::to_string(budget));
  }
  std::vector<std::vector<double>> pl, pr;
  for (const auto& c : cl) pl.push_back(composition_pairs(c, d));
  for (const auto& c : cr) pr.push_back(composition_pairs(c, d));

  double expectation = 0.0;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cr.size(); ++j) {
      expectation += cl[i].probability * cr[j].probability * wasserstein_1(pl[i], pr[j]);
    }
  }
  return expectation;
}

std::vector<double> sample_pair_distances(const ProcessSpec& a, const ProcessSpec& b,
                                          ProbeKind probe, std::size_t n_pairs,
                                          std::uint64_t seed) {
  const auto left = ancestral_sample(*a.process, a.decoder, derive_seed(seed, "left"), n_pairs,
                                     a.embeddings);
  const auto right = ancestral_sample(*b.process, b.decoder, derive_seed(seed, "right"), n_pairs,
                                      b.embeddings);
  std::vector<double> out;
  out.reserve(n_pairs);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    out.push_back(feature_distance(ProbeFeature::prepare(left[i], probe),
                                   ProbeFeature::prepare(right[i], probe)));
  }
  return out;
}

Corpus simulate_corpus(const SyntheticCorpusSpec& spec, std::uint64_t seed) {
  Corpus corpus;
  corpus.task_name = spec.task_name;
  corpus.instances.reserve(spec.instances);
  for (std::size_t i = 0; i < spec.instances; ++i) {
    Instance inst;
    inst.id = "syn-" + std::to_string(i);
    const std::uint64_t s = instance_seed(seed, inst.id);
    inst.context = "synthetic context " + std::to_string(i);
    inst.humans = ancestral_sample(*spec.human.process, spec.human.decoder, derive_seed(s, "human"),
                                   spec.humans_per_instance, spec.human.embeddings);
    inst.generations.emplace(
        spec.run_label,
        ancestral_sample(*spec.model.process, spec.model.decoder, derive_seed(s, "model"),
                         spec.generations_per_instance, spec.model.embeddings));
    corpus.instances.push_back(std::move(inst));
  }
  validate_corpus(corpus);
  return corpus;
}

}  // namespace varcal
