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

#include "varcal/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "varcal/error.hpp"
#include "varcal/seeding.hpp"

namespace varcal {

using nlohmann::json;

ValidationError::ValidationError(std::string message, std::string instance_id,
                                 std::string field, std::optional<std::size_t> line)
    : std::runtime_error([&] {
        std::string full;
        if (line) full += "line " + std::to_string(*line) + ": ";
        if (!instance_id.empty()) full += "instance '" + instance_id + "': ";
        if (!field.empty()) full += field + ": ";
        return full + message;
      }()),
      detail_(std::move(message)),
      instance_id_(std::move(instance_id)),
      field_(std::move(field)),
      line_(line) {}

const Instance* Corpus::find(std::string_view id) const {
  auto it = std::find_if(instances.begin(), instances.end(),
                         [&](const Instance& inst) { return inst.id == id; });
  return it == instances.end() ? nullptr : &*it;
}

namespace {

void check_production(const Production& p, std::optional<std::size_t>& dim,
                      const std::string& id, const std::string& where) {
  if (p.pos_tags) {
    if (!p.tokens) {
      throw ValidationError("pos_tags present without tokens", id, where + ".pos_tags");
    }
    if (p.tokens->size() != p.pos_tags->size()) {
      throw ValidationError("length mismatch: " + std::to_string(p.tokens->size()) +
                                " tokens vs " + std::to_string(p.pos_tags->size()) +
                                " pos_tags",
                            id, where + ".pos_tags");
    }
  }
  if (p.embedding) {
    for (double v : *p.embedding) {
      if (!std::isfinite(v)) {
        throw ValidationError("non-finite embedding entry", id, where + ".embedding");
      }
    }
    if (!dim) {
      if (p.embedding->empty()) {
        throw ValidationError("empty embedding", id, where + ".embedding");
      }
      dim = p.embedding->size();
    } else if (p.embedding->size() != *dim) {
      throw ValidationError("embedding dimension mismatch: expected " +
                                std::to_string(*dim) + ", got " +
                                std::to_string(p.embedding->size()),
                            id, where + ".embedding");
    }
  }
}

void check_instance(const Instance& inst, std::optional<std::size_t>& dim) {
  if (inst.id.empty()) throw ValidationError("empty id", {}, "id");
  if (inst.humans.empty()) {
    throw ValidationError("at least one human production required", inst.id, "humans");
  }
  for (std::size_t i = 0; i < inst.humans.size(); ++i) {
    check_production(inst.humans[i], dim, inst.id, "humans[" + std::to_string(i) + "]");
  }
  for (const auto& [label, prods] : inst.generations) {
    for (std::size_t i = 0; i < prods.size(); ++i) {
      check_production(prods[i], dim, inst.id,
                       "generations." + label + "[" + std::to_string(i) + "]");
    }
  }
}

std::vector<std::string> string_list(const json& j, const char* field,
                                     const std::string& id) {
  if (!j.is_array()) throw ValidationError("expected an array of strings", id, field);
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw ValidationError("expected an array of strings", id, field);
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const json& j, const char* field, const std::string& id) {
  if (!j.is_array()) throw ValidationError("expected an array of numbers", id, field);
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw ValidationError("expected an array of numbers", id, field);
    out.push_back(e.get<double>());
  }
  return out;
}

// Reads optional annotation fields from `j` onto `p`.
void read_annotations(const json& j, Production& p, const std::string& id) {
  if (auto it = j.find("tokens"); it != j.end() && !it->is_null()) {
    p.tokens = string_list(*it, "tokens", id);
  }
  if (auto it = j.find("pos_tags"); it != j.end() && !it->is_null()) {
    p.pos_tags = string_list(*it, "pos_tags", id);
  }
  if (auto it = j.find("embedding"); it != j.end() && !it->is_null()) {
    p.embedding = number_list(*it, "embedding", id);
  }
}

Production read_production(const json& j, const std::string& id) {
  if (!j.is_object()) throw ValidationError("production must be an object", id);
  Production p;
  auto text = j.find("text");
  if (text == j.end() || !text->is_string()) {
    throw ValidationError("missing string field", id, "text");
  }
  p.text = text->get<std::string>();
  read_annotations(j, p, id);
  return p;
}

std::vector<Production> read_productions(const json& j, const std::string& id,
                                         const std::string& field) {
  if (!j.is_array()) throw ValidationError("expected an array", id, field);
  std::vector<Production> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(read_production(e, id));
  return out;
}

Instance read_instance(const json& j) {
  Instance inst;
  auto id = j.find("id");
  if (id == j.end() || !id->is_string()) throw ValidationError("missing string field", {}, "id");
  inst.id = id->get<std::string>();
  if (auto ctx = j.find("context"); ctx != j.end()) {
    if (!ctx->is_string()) throw ValidationError("expected a string", inst.id, "context");
    inst.context = ctx->get<std::string>();
  }
  auto humans = j.find("humans");
  if (humans == j.end()) throw ValidationError("missing field", inst.id, "humans");
  inst.humans = read_productions(*humans, inst.id, "humans");
  if (auto gens = j.find("generations"); gens != j.end() && !gens->is_null()) {
    if (!gens->is_object()) throw ValidationError("expected an object", inst.id, "generations");
    for (const auto& [label, prods] : gens->items()) {
      inst.generations.emplace(label, read_productions(prods, inst.id, "generations." + label));
    }
  }
  return inst;
}

json production_json(const Production& p) {
  json j{{"text", p.text}};
  if (p.tokens) j["tokens"] = *p.tokens;
  if (p.pos_tags) j["pos_tags"] = *p.pos_tags;
  if (p.embedding) j["embedding"] = *p.embedding;
  return j;
}

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw ValidationError("expected a JSON object", {}, {}, line_no);
    return j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), {}, {}, line_no);
  }
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::size_t positive_dim(const json& v, const std::string& id, std::size_t line_no) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ValidationError("must be a positive integer", id, "embedding_dim", line_no);
  }
  return v.get<std::size_t>();
}

}  // namespace

void validate_corpus(Corpus& corpus) {
  std::set<std::string_view> seen;
  for (const auto& inst : corpus.instances) {
    if (!seen.insert(inst.id).second) throw ValidationError("duplicate id", inst.id, "id");
    check_instance(inst, corpus.embedding_dim);
  }
}

Corpus parse_corpus(std::istream& in) {
  Corpus corpus;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    json j = parse_line(line, line_no);
    if (first && !j.contains("id") && !j.contains("humans")) {
      first = false;
      if (auto t = j.find("task_name"); t != j.end()) {
        if (!t->is_string()) throw ValidationError("expected a string", {}, "task_name", line_no);
        corpus.task_name = t->get<std::string>();
      }
      if (auto d = j.find("embedding_dim"); d != j.end() && !d->is_null()) {
        corpus.embedding_dim = positive_dim(*d, {}, line_no);
      }
      continue;
    }
    first = false;
    try {
      Instance inst = read_instance(j);
      if (!seen.insert(inst.id).second) throw ValidationError("duplicate id", inst.id, "id");
      check_instance(inst, corpus.embedding_dim);
      corpus.instances.push_back(std::move(inst));
    } catch (const ValidationError& e) {
      if (e.line()) throw;
      throw ValidationError(e.detail(), e.instance_id(), e.field(), line_no);
    }
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
  return parse_corpus(in);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  json header = json::object();
  header["task_name"] = corpus.task_name;
  if (corpus.embedding_dim) header["embedding_dim"] = *corpus.embedding_dim;
  out << header.dump() << '\n';
  for (const auto& inst : corpus.instances) {
    json j{{"id", inst.id}, {"context", inst.context}};
    j["humans"] = json::array();
    for (const auto& p : inst.humans) j["humans"].push_back(production_json(p));
    j["generations"] = json::object();
    for (const auto& [label, prods] : inst.generations) {
      auto& arr = j["generations"][label] = json::array();
      for (const auto& p : prods) arr.push_back(production_json(p));
    }
    out << j.dump() << '\n';
  }
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_corpus(corpus, buf);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << buf.str();
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Corpus attach_annotations(Corpus corpus, std::istream& annotations) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    index.emplace(corpus.instances[i].id, i);
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(annotations, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    json j = parse_line(line, line_no);
    if (!j.contains("id")) {
      if (auto d = j.find("embedding_dim"); d != j.end() && !d->is_null()) {
        std::size_t dim = positive_dim(*d, {}, line_no);
        if (corpus.embedding_dim && *corpus.embedding_dim != dim) {
          throw ValidationError("annotation header declares " + std::to_string(dim) +
                                    " but corpus has " + std::to_string(*corpus.embedding_dim),
                                {}, "embedding_dim", line_no);
        }
      }
      continue;
    }
    if (!j["id"].is_string()) throw ValidationError("expected a string", {}, "id", line_no);
    const std::string id = j["id"].get<std::string>();
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError("no such instance", id, "id", line_no);
    Instance& inst = corpus.instances[it->second];

    auto role_it = j.find("role");
    if (role_it == j.end() || !role_it->is_string()) {
      throw ValidationError("missing string field", id, "role", line_no);
    }
    const std::string role = role_it->get<std::string>();
    std::vector<Production>* target = nullptr;
    if (role == "human") {
      target = &inst.humans;
    } else if (auto g = inst.generations.find(role); g != inst.generations.end()) {
      target = &g->second;
    } else {
      throw ValidationError("no such role '" + role + "'", id, "role", line_no);
    }

    auto idx_it = j.find("index");
    if (idx_it == j.end() || !idx_it->is_number_integer() || idx_it->get<long long>() < 0) {
      throw ValidationError("missing nonnegative integer", id, "index", line_no);
    }
    const auto idx = idx_it->get<std::size_t>();
    if (idx >= target->size()) {
      throw ValidationError("index " + std::to_string(idx) + " out of range for " +
                                std::to_string(target->size()) + " productions",
                            id, "index", line_no);
    }
    Production& p = (*target)[idx];
    try {
      read_annotations(j, p, id);
      std::string where = role + "[" + std::to_string(idx) + "]";
      check_production(p, corpus.embedding_dim, id, where);
    } catch (const ValidationError& e) {
      throw ValidationError(e.detail(), e.instance_id(), e.field(), line_no);
    }
  }
  return corpus;
}

Corpus attach_annotations(Corpus corpus, const std::filesystem::path& annotations_path) {
  std::ifstream in(annotations_path);
  if (!in) throw std::runtime_error("cannot open annotations file: " + annotations_path.string());
  return attach_annotations(std::move(corpus), in);
}

std::pair<std::vector<Production>, std::vector<Production>> disjoint_split(
    std::span<const Production> productions, std::uint64_t seed) {
  const std::size_t n = productions.size();
  if (n < 4) {
    throw InsufficientDataError("insufficient for control: " + std::to_string(n) +
                                " productions, need at least 4");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t first = n / 2;
  std::pair<std::vector<Production>, std::vector<Production>> halves;
  halves.first.reserve(first);
  halves.second.reserve(n - first);
  for (std::size_t i = 0; i < n; ++i) {
    (i < first ? halves.first : halves.second).push_back(productions[order[i]]);
  }
  return halves;
}

namespace {

// Decodes one UTF-8 code point; invalid bytes decode as themselves.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0) {
    if (int c1 = cont(1); c1 >= 0) {
      i += 2;
      return (static_cast<char32_t>(b0 & 0x1F) << 6) | c1;
    }
  } else if ((b0 & 0xF0) == 0xE0) {
    int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) {
      i += 3;
      return (static_cast<char32_t>(b0 & 0x0F) << 12) | (c1 << 6) | c2;
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
      i += 4;
      return (static_cast<char32_t>(b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3;
    }
  }
  i += 1;
  return b0;
}

bool is_unicode_space(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

}  // namespace

std::vector<std::string> whitespace_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  std::size_t start = std::string_view::npos;
  while (i < text.size()) {
    const std::size_t at = i;
    const char32_t c = decode_utf8(text, i);
    if (is_unicode_space(c)) {
      if (start != std::string_view::npos) {
        tokens.emplace_back(text.substr(start, at - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = at;
    }
  }
  if (start != std::string_view::npos) tokens.emplace_back(text.substr(start));
  return tokens;
}

}  // namespace varcal
