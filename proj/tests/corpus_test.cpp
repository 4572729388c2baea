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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "varcal/error.hpp"

namespace varcal {
namespace {

Corpus parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

std::vector<Production> numbered(std::size_t n) {
  std::vector<Production> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({"p" + std::to_string(i)});
  return out;
}

TEST(LoadCorpus, TwoWellFormedLines) {
  auto corpus = parse(
      R"({"id":"a","context":"src a","humans":[{"text":"x y"}],"generations":{"run":[{"text":"x"}]}})"
      "\n"
      R"({"id":"b","context":"src b","humans":[{"text":"z","tokens":["z"],"pos_tags":["NN"]}]})"
      "\n");
  ASSERT_EQ(corpus.instances.size(), 2u);
  EXPECT_EQ(corpus.instances[0].id, "a");
  EXPECT_EQ(corpus.instances[0].generations.at("run").size(), 1u);
  EXPECT_FALSE(corpus.instances[0].humans[0].tokens.has_value());
  EXPECT_EQ(corpus.instances[1].humans[0].pos_tags->front(), "NN");
  EXPECT_NE(corpus.find("b"), nullptr);
  EXPECT_EQ(corpus.find("c"), nullptr);
}

TEST(LoadCorpus, HeaderLine) {
  auto corpus = parse(R"({"task_name":"Translation","embedding_dim":2})"
                      "\n"
                      R"({"id":"a","context":"","humans":[{"text":"x","embedding":[1,0]}]})");
  EXPECT_EQ(corpus.task_name, "Translation");
  EXPECT_EQ(corpus.embedding_dim, 2u);
}

TEST(LoadCorpus, PosTokenLengthMismatchNamesInstance) {
  try {
    parse(R"({"id":"inst-7","humans":[{"text":"a b","tokens":["a","b"],"pos_tags":["DT"]}]})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.instance_id(), "inst-7");
    EXPECT_NE(e.field().find("pos_tags"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("length mismatch"), std::string::npos);
  }
}

TEST(LoadCorpus, DuplicateId) {
  try {
    parse(R"({"id":"wmt-17","humans":[{"text":"a"}]})"
          "\n"
          R"({"id":"wmt-17","humans":[{"text":"b"}]})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.instance_id(), "wmt-17");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("duplicate id"), std::string::npos);
  }
}

TEST(LoadCorpus, EmbeddingDimensionMismatch) {
  EXPECT_THROW(parse(R"({"embedding_dim":3})"
                     "\n"
                     R"({"id":"a","humans":[{"text":"x","embedding":[1,0]}]})"),
               ValidationError);
  // Inferred from the first embedding when undeclared.
  EXPECT_THROW(parse(R"({"id":"a","humans":[{"text":"x","embedding":[1,0]},{"text":"y","embedding":[1,0,0]}]})"),
               ValidationError);
}

TEST(LoadCorpus, MalformedLineReportsLineNumber) {
  try {
    parse(R"({"id":"a","humans":[{"text":"x"}]})"
          "\n\n"
          R"({"id":"b", humans)");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadCorpus, RejectsEmptyHumansAndMissingText) {
  EXPECT_THROW(parse(R"({"id":"a","humans":[]})"), ValidationError);
  EXPECT_THROW(parse(R"({"id":"a","humans":[{"tokens":["x"]}]})"), ValidationError);
  EXPECT_THROW(parse(R"({"humans":[{"text":"x"}]})"), ValidationError);
}

TEST(LoadCorpus, WriteThenLoadRoundTrips) {
  Corpus corpus;
  corpus.task_name = "Simplification";
  corpus.embedding_dim = 2;
  Instance a{"a", "ctx \"quoted\" ü", {}, {}};
  a.humans.push_back({"one two", std::vector<std::string>{"one", "two"},
                      std::vector<std::string>{"NUM", "NUM"}, std::vector<double>{0.1, -2.5e-7}});
  a.humans.push_back({"three", std::nullopt, std::nullopt, std::nullopt});
  a.generations["greedy"] = {{"x", std::vector<std::string>{"x"}, std::nullopt, std::vector<double>{1.0 / 3.0, 2.0}}};
  corpus.instances.push_back(a);
  corpus.instances.push_back({"b", "", {{"only"}}, {}});

  std::stringstream buf;
  write_corpus(corpus, buf);
  EXPECT_EQ(parse_corpus(buf), corpus);

  const auto path = std::filesystem::temp_directory_path() / "varcal_corpus_roundtrip.jsonl";
  save_corpus(corpus, path);
  EXPECT_EQ(load_corpus(path), corpus);
  std::filesystem::remove(path);
}

// ---------------------------------------------------------------------------

Corpus annotated_base() {
  return parse(R"({"id":"a","humans":[{"text":"the cat sat"},{"text":"a dog"}],"generations":{"run":[{"text":"g0"},{"text":"g1"}]}})"
               "\n"
               R"({"id":"b","humans":[{"text":"h"}]})");
}

Corpus attach(Corpus c, const std::string& text) {
  std::istringstream in(text);
  return attach_annotations(std::move(c), in);
}

TEST(AttachAnnotations, MergesTokensAndTags) {
  auto merged = attach(annotated_base(),
                       R"({"id":"a","role":"human","index":0,"tokens":["the","cat","sat"],"pos_tags":["DT","NN","VBD"]})");
  const auto& p = merged.instances[0].humans[0];
  ASSERT_TRUE(p.tokens && p.pos_tags);
  EXPECT_EQ(p.tokens->size(), 3u);
  EXPECT_EQ(p.pos_tags->at(2), "VBD");
  EXPECT_FALSE(merged.instances[0].humans[1].tokens.has_value());
}

TEST(AttachAnnotations, RunLabelRoleAndHeader) {
  auto merged = attach(annotated_base(),
                       R"({"embedding_dim":2,"encoder":"enc","tagger":"tag","normalized":false})"
                       "\n"
                       R"({"id":"a","role":"run","index":1,"embedding":[0.5,0.5]})");
  EXPECT_EQ(merged.instances[0].generations.at("run")[1].embedding->size(), 2u);
}

TEST(AttachAnnotations, OutOfRangeIndex) {
  try {
    attach(annotated_base(), R"({"id":"a","role":"human","index":9,"tokens":["x"]})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.instance_id(), "a");
    EXPECT_EQ(e.field(), "index");
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(AttachAnnotations, UnknownInstanceOrRole) {
  EXPECT_THROW(attach(annotated_base(), R"({"id":"zzz","role":"human","index":0})"), ValidationError);
  EXPECT_THROW(attach(annotated_base(), R"({"id":"a","role":"other","index":0})"), ValidationError);
}

TEST(AttachAnnotations, DimensionMismatch) {
  EXPECT_THROW(attach(annotated_base(),
                      R"({"id":"a","role":"human","index":0,"embedding":[1,0]})"
                      "\n"
                      R"({"id":"a","role":"human","index":1,"embedding":[1,0,0]})"),
               ValidationError);
}

TEST(AttachAnnotations, LengthMismatchAfterMerge) {
  auto base = annotated_base();
  base.instances[0].humans[0].tokens = std::vector<std::string>{"the", "cat", "sat"};
  EXPECT_THROW(attach(base, R"({"id":"a","role":"human","index":0,"pos_tags":["DT"]})"), ValidationError);
}

TEST(AttachAnnotations, EmptyFileIsIdentity) {
  EXPECT_EQ(attach(annotated_base(), ""), annotated_base());
}

// ---------------------------------------------------------------------------

TEST(DisjointSplit, TenIntoFiveAndFive) {
  auto prods = numbered(10);
  auto [left, right] = disjoint_split(prods, 7);
  EXPECT_EQ(left.size(), 5u);
  EXPECT_EQ(right.size(), 5u);
  std::multiset<std::string> all;
  for (const auto& p : left) all.insert(p.text);
  for (const auto& p : right) all.insert(p.text);
  std::multiset<std::string> expected;
  for (const auto& p : prods) expected.insert(p.text);
  EXPECT_EQ(all, expected);
}

TEST(DisjointSplit, OddPutsExtraInSecondHalf) {
  auto [left, right] = disjoint_split(numbered(5), 1);
  EXPECT_EQ(left.size(), 2u);
  EXPECT_EQ(right.size(), 3u);
}

TEST(DisjointSplit, ThreeIsTooFew) {
  EXPECT_THROW(disjoint_split(numbered(3), 1), InsufficientDataError);
}

TEST(DisjointSplit, PropertyDisjointExhaustiveDeterministic) {
  std::mt19937_64 rng(99);
  bool any_seed_difference = false;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng() % 20;
    const auto prods = numbered(n);
    const std::uint64_t seed = rng();
    auto [l1, r1] = disjoint_split(prods, seed);
    auto [l2, r2] = disjoint_split(prods, seed);
    ASSERT_EQ(l1, l2);
    ASSERT_EQ(r1, r2);
    ASSERT_EQ(l1.size(), n / 2);
    ASSERT_EQ(r1.size(), n - n / 2);
    std::set<std::string> seen;
    for (const auto& p : l1) seen.insert(p.text);
    for (const auto& p : r1) ASSERT_TRUE(seen.insert(p.text).second) << "overlap";
    ASSERT_EQ(seen.size(), n);
    auto [l3, r3] = disjoint_split(prods, seed + 1);
    any_seed_difference |= (l3 != l1);
  }
  EXPECT_TRUE(any_seed_difference);
}

TEST(WhitespaceTokenize, SplitsOnUnicodeSpaceWithoutFolding) {
  EXPECT_EQ(whitespace_tokenize("  Hello\tworld \n"), (std::vector<std::string>{"Hello", "world"}));
  // U+00A0 no-break space and U+3000 ideographic space separate tokens.
  EXPECT_EQ(whitespace_tokenize("a\xc2\xa0" "b\xe3\x80\x80" "C"), (std::vector<std::string>{"a", "b", "C"}));
  EXPECT_EQ(whitespace_tokenize("Grüße"), (std::vector<std::string>{"Grüße"}));
  EXPECT_TRUE(whitespace_tokenize("   ").empty());
}

}  // namespace
}  // namespace varcal
