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

#include "parenteval/baselines.h"

#include <algorithm>
#include <cmath>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace parenteval {
namespace {

using testing::MakeInstance;
using testing::Toks;

using RefLists = std::vector<std::vector<TokenSequence>>;

TEST(Bleu, IdenticalHypothesesScoreOne) {
  const std::vector<TokenSequence> hyps = {Toks("the cat sat on the mat"),
                                           Toks("a dog ran home today")};
  const RefLists refs = {{hyps[0]}, {hyps[1]}};
  auto score = BleuCorpus(hyps, refs);
  ASSERT_TRUE(score.ok());
  EXPECT_EQ(score->score, 1.0);
  EXPECT_EQ(score->brevity_penalty, 1.0);
  EXPECT_THAT(score->precisions, ::testing::Each(1.0));
}

TEST(Bleu, BrevityPenalty) {
  const std::vector<TokenSequence> hyps = {Toks("a b c d")};
  const RefLists refs = {{Toks("a b c d e")}};
  auto score = BleuCorpus(hyps, refs);
  ASSERT_TRUE(score.ok());
  EXPECT_EQ(score->hypothesis_length, 4);
  EXPECT_EQ(score->reference_length, 5);
  EXPECT_NEAR(score->brevity_penalty, 0.7788007830714049, 1e-15);
  EXPECT_NEAR(score->score, 0.7788007830714049, 1e-15);
}

TEST(Bleu, NoSharedNgramsFloorsAtEpsilon) {
  const std::vector<TokenSequence> hyps = {Toks("a b c d e f")};
  const RefLists refs = {{Toks("u v w x y z")}};
  auto score = BleuCorpus(hyps, refs);
  ASSERT_TRUE(score.ok());
  EXPECT_THAT(score->precisions, ::testing::Each(1e-5));
  EXPECT_NEAR(score->score, 1e-5 * score->brevity_penalty, 1e-18);
}

TEST(Bleu, ClosestReferenceLengthTiesToShorter) {
  const TokenSequence hyp = Toks("a b c d");
  const std::vector<TokenSequence> refs = {Toks("a b c d e f"), Toks("a b"),
                                           Toks("a b c d e z"),
                                           Toks("x a b c d e")};
  BleuStats stats = ComputeBleuStats(hyp, refs, refs, 4);
  EXPECT_EQ(stats.reference_length, 2);
  const std::vector<TokenSequence> tie = {Toks("a b c"), Toks("a b c d e")};
  EXPECT_EQ(ComputeBleuStats(hyp, tie, tie, 4).reference_length, 3);
}

TEST(Bleu, MultiReferenceClippingUsesMax) {
  const TokenSequence hyp = Toks("the the the");
  const std::vector<TokenSequence> refs = {Toks("the cat"),
                                           Toks("the the dog")};
  const BleuStats stats = ComputeBleuStats(hyp, refs, refs, 4);
  EXPECT_EQ(stats.matches[0], 2);
  EXPECT_EQ(stats.totals[0], 3);
  EXPECT_EQ(stats.matches[1], 1);
  EXPECT_EQ(stats.totals[3], 0);
}

TEST(Bleu, Errors) {
  const std::vector<TokenSequence> hyps = {Toks("a")};
  EXPECT_FALSE(BleuCorpus(hyps, RefLists{}).ok());
  EXPECT_FALSE(BleuCorpus(std::vector<TokenSequence>{}, RefLists{}).ok());
  EXPECT_FALSE(BleuCorpus(hyps, RefLists{{}}).ok());
  EXPECT_FALSE(BleuInstances(std::vector<EvalInstance>{}).ok());
  EXPECT_FALSE(BleuT(std::vector<EvalInstance>{}).ok());
}

TEST(Bleu, EmptyHypothesisScoresZero) {
  auto score = BleuCorpus(std::vector<TokenSequence>{{}}, RefLists{{Toks("a")}});
  ASSERT_TRUE(score.ok());
  EXPECT_EQ(score->brevity_penalty, 0.0);
  EXPECT_EQ(score->score, 0.0);
}

TEST(Bleu, MatchesOracleOnRandomCorpora) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 1 + rng.UniformIndex(6);
    std::vector<TokenSequence> hyps;
    RefLists refs;
    for (size_t i = 0; i < n; ++i) {
      hyps.push_back(testing::RandomSequence(rng, 0, 12, 6));
      std::vector<TokenSequence> r;
      const size_t k = 1 + rng.UniformIndex(3);
      for (size_t j = 0; j < k; ++j) {
        r.push_back(testing::RandomSequence(rng, 1, 12, 6));
      }
      refs.push_back(r);
    }
    auto score = BleuCorpus(hyps, refs);
    ASSERT_TRUE(score.ok());
    EXPECT_NEAR(score->score, testing::OracleBleu(hyps, refs, refs), 1e-12);
    EXPECT_GE(score->score, 0.0);
    EXPECT_LE(score->score, 1.0);
  }
}

TEST(Bleu, InstanceOrderInvariant) {
  Rng rng(5);
  std::vector<EvalInstance> instances;
  for (int i = 0; i < 40; ++i) instances.push_back(testing::RandomInstance(rng, 2));
  auto forward = BleuInstances(instances);
  std::vector<EvalInstance> reversed(instances.rbegin(), instances.rend());
  auto backward = BleuInstances(reversed);
  ASSERT_TRUE(forward.ok() && backward.ok());
  EXPECT_EQ(forward->score, backward->score);
}

TEST(BleuT, CopiedTableValueRaisesScore) {
  const std::vector<EvalInstance> corpus = {
      MakeInstance({{"name", "michael dahlquist"}, {"occupation", "drummer"}},
                   {"michael dahlquist was a musician"},
                   "michael dahlquist was a drummer")};
  auto bleu = BleuInstances(corpus);
  auto bleu_t = BleuT(corpus);
  ASSERT_TRUE(bleu.ok() && bleu_t.ok());
  EXPECT_GT(bleu_t->score, bleu->score);

  const auto& inst = corpus[0];
  std::vector<TokenSequence> clip = inst.references;
  for (const Record& r : inst.table.records) clip.push_back(r.value);
  EXPECT_NEAR(bleu_t->score,
              testing::OracleBleu({inst.generation}, {clip}, {inst.references}),
              1e-12);
  EXPECT_NEAR(bleu->score,
              testing::OracleBleu({inst.generation}, {inst.references},
                                  {inst.references}),
              1e-12);
}

TEST(BleuT, DisjointTableLeavesScoreUnchanged) {
  const std::vector<EvalInstance> corpus = {
      MakeInstance({{"x", "qq rr"}}, {"a b c d e"}, "a b c x e")};
  EXPECT_EQ(BleuT(corpus)->score, BleuInstances(corpus)->score);
}

TEST(BleuT, GenerationEqualToReferenceScoresOne) {
  const std::vector<EvalInstance> corpus = {
      MakeInstance({{"x", "a"}}, {"a b c d e"}, "a b c d e")};
  EXPECT_EQ(BleuT(corpus)->score, 1.0);
}

TEST(BleuT, NeverBelowBleu) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<EvalInstance> instances;
    const size_t n = 1 + rng.UniformIndex(5);
    for (size_t i = 0; i < n; ++i) instances.push_back(testing::RandomInstance(rng, 2));
    EXPECT_GE(BleuT(instances)->score, BleuInstances(instances)->score);
  }
}

AttributeValue Pair(const std::string& a, const std::string& v) {
  return {Toks(a), Toks(v)};
}

TEST(Extractive, WorkedExample) {
  const Table table = testing::MakeTable({{"a", "x"}, {"b", "y"}});
  auto scores = ExtractiveMetrics({Pair("a", "x")}, {}, table);
  ASSERT_TRUE(scores.ok());
  EXPECT_DOUBLE_EQ(scores->rg, 1.0);
  EXPECT_DOUBLE_EQ(scores->rg_f, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(scores->cs, 0.0);
}

TEST(Extractive, PerfectAndEmpty) {
  const Table table = testing::MakeTable({{"a", "x"}, {"b", "y"}});
  const ExtractionSet all = TablePairs(table);
  EXPECT_EQ(all.size(), 2);
  auto perfect = ExtractiveMetrics(all, all, table);
  EXPECT_EQ(perfect->cs, 1.0);
  EXPECT_EQ(perfect->rg, 1.0);
  EXPECT_EQ(perfect->rg_f, 1.0);

  auto empty = ExtractiveMetrics({}, {}, table);
  EXPECT_EQ(empty->cs, 1.0);
  EXPECT_EQ(empty->rg_f, 0.0);
  EXPECT_FALSE(ExtractiveMetrics({}, {}, Table{}).ok());
}

TEST(Extractive, CompareSets) {
  const ExtractionSet a = {Pair("a", "x"), Pair("b", "y"), Pair("c", "z")};
  const ExtractionSet b = {Pair("a", "x"), Pair("d", "w")};
  const SetPrf prf = CompareSets(a, b);
  EXPECT_DOUBLE_EQ(prf.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(prf.recall, 0.5);
  EXPECT_DOUBLE_EQ(prf.f, 0.4);
  EXPECT_EQ(CompareSets({}, b).f, 0.0);
  EXPECT_EQ(CompareSets(a, {}).f, 0.0);
}

TEST(LoadExtractions, ParsesAndValidates) {
  testing::TempDir dir;
  const std::string path = dir.Write(
      "ext.jsonl",
      "{\"index\": 0, \"pairs\": [{\"attribute\": \"Name\", \"value\": "
      "\"John Doe\"}, {\"attribute\": \"name\", \"value\": \"john doe\"}]}\n"
      "\n"
      "{\"index\": 3, \"pairs\": []}\n");
  auto loaded = LoadExtractions(path);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  ASSERT_EQ(loaded->size(), 2);
  EXPECT_THAT(loaded->at(0), ::testing::ElementsAre(Pair("name", "john doe")));
  EXPECT_TRUE(loaded->at(3).empty());

  const std::string dup = dir.Write(
      "dup.jsonl", "{\"index\": 1, \"pairs\": []}\n{\"index\": 1, \"pairs\": []}\n");
  auto status = LoadExtractions(dup).status();
  EXPECT_FALSE(status.ok());
  EXPECT_THAT(std::string(status.message()), ::testing::HasSubstr(":2:"));

  const std::string neg = dir.Write("neg.jsonl", "{\"index\": -1, \"pairs\": []}\n");
  EXPECT_FALSE(LoadExtractions(neg).ok());
  const std::string bad = dir.Write("bad.jsonl", "{\"index\": 0}\n");
  EXPECT_FALSE(LoadExtractions(bad).ok());
  EXPECT_FALSE(LoadExtractions(dir.Path("missing.jsonl")).ok());
}

}  // namespace
}  // namespace parenteval
