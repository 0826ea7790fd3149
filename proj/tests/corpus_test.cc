// Copyright 2026 The parenteval Authors.
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

#include "parenteval/corpus.h"

#include <algorithm>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace parenteval {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;
using ::testing::UnorderedElementsAre;
using testing::MakeTable;
using testing::TempDir;

TEST(Tokenize, LowercasesAndSplitsOnWhitespace) {
  EXPECT_THAT(Tokenize("John Doe"), ElementsAre("john", "doe"));
  EXPECT_THAT(Tokenize(""), IsEmpty());
  EXPECT_THAT(Tokenize("december 22 , 1965"),
              ElementsAre("december", "22", ",", "1965"));
  EXPECT_THAT(Tokenize("  a\t\tb \n"), ElementsAre("a", "b"));
}

TEST(Tokenize, IdempotentOnJoinedOutput) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::string raw;
    const size_t len = rng.UniformIndex(30);
    const char alphabet[] = "aB _\t,.Xz9\n";
    for (size_t i = 0; i < len; ++i) {
      raw.push_back(alphabet[rng.UniformIndex(sizeof(alphabet) - 1)]);
    }
    const TokenSequence once = Tokenize(raw);
    EXPECT_EQ(Tokenize(JoinTokens(once)), once) << raw;
  }
}

TEST(AttributeTokens, SplitsUnderscores) {
  EXPECT_THAT(*AttributeTokens("birth_date"), ElementsAre("birth", "date"));
  EXPECT_THAT(*AttributeTokens("Born"), ElementsAre("born"));
  EXPECT_THAT(*AttributeTokens("occupation(s)"), ElementsAre("occupation(s)"));
  EXPECT_FALSE(AttributeTokens("").ok());
  EXPECT_FALSE(AttributeTokens("__ _").ok());
}

TEST(TableLexicalItems, UnionOfAttributesAndValues) {
  EXPECT_THAT(TableLexicalItems(MakeTable({{"name", "john doe"},
                                           {"born", "1980"}})),
              UnorderedElementsAre("name", "john", "doe", "born", "1980"));
  EXPECT_THAT(TableLexicalItems(MakeTable({{"birth_date", "22 december 1965"}})),
              UnorderedElementsAre("birth", "date", "22", "december", "1965"));
  EXPECT_THAT(TableLexicalItems(MakeTable({{"name", "john"},
                                           {"alias", "john"}})),
              UnorderedElementsAre("name", "alias", "john"));
}

TEST(TableLexicalItems, InvariantUnderRecordOrder) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Table t = testing::RandomTable(rng, 6);
    Table shuffled = t;
    for (size_t i = shuffled.records.size(); i > 1; --i) {
      std::swap(shuffled.records[i - 1],
                shuffled.records[rng.UniformIndex(i)]);
    }
    EXPECT_EQ(TableLexicalItems(t), TableLexicalItems(shuffled));
  }
}

constexpr char kLine1[] =
    R"({"table": [{"attribute": "name", "value": "John Doe"}], )"
    R"("references": ["john doe is a person"], "generation": "john doe"})";
constexpr char kLine2[] =
    R"({"table": [{"attribute": "born", "value": "1980"}], )"
    R"("references": ["born 1980", "in 1980"], "generation": ""})";
constexpr char kLine3[] =
    R"({"table": [{"attribute": "a_b", "value": "x"}], "references": ["x"], )"
    R"("generation": "x y", "instance_id": "t9", "system": "s1"})";

TEST(LoadInstances, ReadsLinesInOrder) {
  TempDir dir;
  const std::string path = dir.Write(
      "d.jsonl", std::string(kLine1) + "\n" + kLine2 + "\n\n" + kLine3 + "\n");
  auto instances = LoadInstances(path);
  ASSERT_TRUE(instances.ok()) << instances.status();
  ASSERT_EQ(instances->size(), 3);
  EXPECT_THAT((*instances)[0].table.records[0].value, ElementsAre("john", "doe"));
  EXPECT_EQ((*instances)[1].references.size(), 2);
  EXPECT_THAT((*instances)[1].generation, IsEmpty());
  EXPECT_THAT((*instances)[2].table.records[0].attribute, ElementsAre("a", "b"));
  EXPECT_EQ((*instances)[2].instance_id, "t9");
  EXPECT_EQ((*instances)[2].system, "s1");
}

TEST(LoadInstances, ErrorsNameTheLine) {
  TempDir dir;
  auto expect_error = [&](const std::string& bad, const std::string& what) {
    const std::string path =
        dir.Write("bad.jsonl", std::string(kLine1) + "\n" + bad + "\n");
    auto result = LoadInstances(path);
    ASSERT_FALSE(result.ok()) << bad;
    EXPECT_THAT(std::string(result.status().message()),
                HasSubstr("bad.jsonl:2:"));
    EXPECT_THAT(std::string(result.status().message()), HasSubstr(what));
  };
  expect_error(R"({"table": [{"attribute": "a", "value": "b"}], "references": [], "generation": "x"})",
               "no references");
  expect_error(R"({"table": [], "references": ["r"], "generation": "x"})",
               "no records");
  expect_error(R"({"table": [{"attribute": "a", "value": "b"}], "references": [" "], "generation": "x"})",
               "empty");
  expect_error(R"({"table": [{"attribute": "a", "value": ""}], "references": ["r"], "generation": "x"})",
               "value");
  expect_error(R"({"table": [{"attribute": "a", "value": "b"}], "references": ["r"]})",
               "generation");
  expect_error("{not json", "malformed JSON");
}

TEST(LoadInstances, MissingFile) {
  EXPECT_EQ(LoadInstances("/nonexistent/x.jsonl").status().code(),
            absl::StatusCode::kNotFound);
}

TEST(LoadInstances, RoundTripsThroughSave) {
  Rng rng(5);
  std::vector<EvalInstance> instances;
  for (int i = 0; i < 40; ++i) {
    EvalInstance inst = testing::RandomInstance(rng, 3);
    if (i % 3 == 0) {
      inst.instance_id = "id" + std::to_string(i);
      inst.system = "sys";
    }
    instances.push_back(std::move(inst));
  }
  TempDir dir;
  const std::string path = dir.Path("rt.jsonl");
  ASSERT_TRUE(SaveInstances(instances, path).ok());
  auto loaded = LoadInstances(path);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(*loaded, instances);
}

TEST(LoadJudgments, ReadsComparisons) {
  TempDir dir;
  const std::string path = dir.Write(
      "j.jsonl",
      R"({"instance_id": "i1", "system_a": "A", "system_b": "B", "winner": "a"})"
      "\n"
      R"({"instance_id": "i1", "system_a": "A", "system_b": "B", "winner": "a"})"
      "\n"
      R"({"instance_id": "i2", "system_a": "A", "system_b": "B", "winner": "b"})"
      "\n");
  auto set = LoadJudgments(path);
  ASSERT_TRUE(set.ok()) << set.status();
  ASSERT_EQ(set->comparisons.size(), 3);
  EXPECT_THAT(set->systems, ElementsAre("A", "B"));
  EXPECT_EQ(set->comparisons[2].winner_id(), "B");
  EXPECT_EQ(set->comparisons[2].loser_id(), "A");
  EXPECT_FALSE(set->per_system_scores.has_value());
}

TEST(LoadJudgments, RejectsUnknownWinner) {
  TempDir dir;
  const std::string path = dir.Write(
      "j.jsonl",
      R"({"instance_id": "i1", "system_a": "A", "system_b": "B", "winner": "a"})"
      "\n"
      R"({"instance_id": "i1", "system_a": "A", "system_b": "B", "winner": "C"})"
      "\n");
  auto set = LoadJudgments(path);
  ASSERT_FALSE(set.ok());
  EXPECT_THAT(std::string(set.status().message()), HasSubstr("j.jsonl:2:"));
}

TEST(LoadJudgments, RejectsSelfComparison) {
  TempDir dir;
  const std::string path = dir.Write(
      "j.jsonl",
      R"({"instance_id": "i1", "system_a": "A", "system_b": "A", "winner": "a"})");
  EXPECT_FALSE(LoadJudgments(path).ok());
}

TEST(LoadJudgments, EmptyFileIsValid) {
  TempDir dir;
  auto set = LoadJudgments(dir.Write("j.jsonl", ""));
  ASSERT_TRUE(set.ok());
  EXPECT_THAT(set->comparisons, IsEmpty());
  EXPECT_THAT(set->systems, IsEmpty());
}

TEST(LoadPairs, ReadsAndValidates) {
  TempDir dir;
  auto pairs = LoadPairs(dir.Write(
      "p.jsonl",
      R"({"table": [{"attribute": "city", "value": "paris"}], "reference": "Paris France"})"));
  ASSERT_TRUE(pairs.ok()) << pairs.status();
  ASSERT_EQ(pairs->size(), 1);
  EXPECT_THAT((*pairs)[0].reference, ElementsAre("paris", "france"));

  auto bad = LoadPairs(dir.Write(
      "q.jsonl",
      R"({"table": [{"attribute": "city", "value": "paris"}], "reference": ""})"));
  EXPECT_FALSE(bad.ok());
}

}  // namespace
}  // namespace parenteval
