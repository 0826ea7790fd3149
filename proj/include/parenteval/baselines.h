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

// Comparison metrics that need no neural components: corpus BLEU, BLEU-T
// (table values as additional references) and the content-selection /
// relation-generation scores computed over (attribute, value) extractions
// produced by an external information-extraction system.

#ifndef PARENTEVAL_BASELINES_H_
#define PARENTEVAL_BASELINES_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "parenteval/corpus.h"
#include "parenteval/ngrams.h"

namespace parenteval {

struct BleuOptions {
  int max_order = kMaxNgramOrder;
  // Zero precisions are floored at this value.
  double epsilon = 1e-5;
};

// Sufficient statistics of one hypothesis; corpus BLEU sums these.
struct BleuStats {
  std::vector<int64_t> matches;  // clipped n-gram matches per order
  std::vector<int64_t> totals;   // hypothesis n-grams per order
  int64_t hypothesis_length = 0;
  int64_t reference_length = 0;  // closest reference length

  BleuStats& operator+=(const BleuStats& other);
};

struct BleuScore {
  double score = 0.0;
  std::vector<double> precisions;  // floored at epsilon
  double brevity_penalty = 0.0;
  int64_t hypothesis_length = 0;
  int64_t reference_length = 0;
};

// `clip_references` bound the n-gram clipping (max count over references);
// `length_references` pick the closest reference length, ties to the
// shorter one.
BleuStats ComputeBleuStats(std::span<const Token> hypothesis,
                           std::span<const TokenSequence> clip_references,
                           std::span<const TokenSequence> length_references,
                           int max_order);

BleuScore BleuFromStats(const BleuStats& stats, const BleuOptions& options);

absl::StatusOr<BleuScore> BleuCorpus(
    std::span<const TokenSequence> hypotheses,
    std::span<const std::vector<TokenSequence>> references,
    const BleuOptions& options = {});

// Generation vs references for every instance.
absl::StatusOr<BleuScore> BleuInstances(std::span<const EvalInstance> instances,
                                        const BleuOptions& options = {});

// Like BleuInstances, but every record value is added as its own
// pseudo-reference for n-gram clipping. The effective reference length is
// still taken from the real references only.
absl::StatusOr<BleuScore> BleuT(std::span<const EvalInstance> instances,
                                const BleuOptions& options = {});

// Per-instance statistics; `with_table` adds the table pseudo-references.
std::vector<BleuStats> InstanceBleuStats(std::span<const EvalInstance> instances,
                                         bool with_table, int max_order);

using AttributeValue = std::pair<TokenSequence, TokenSequence>;
using ExtractionSet = std::set<AttributeValue>;

// The table's records as (attribute, value) pairs.
ExtractionSet TablePairs(const Table& table);

struct SetPrf {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Exact-match precision/recall/F1 of `predicted` against `target`.
// Empty vs empty scores 1; empty vs non-empty scores 0.
SetPrf CompareSets(const ExtractionSet& predicted, const ExtractionSet& target);

struct ExtractiveScores {
  double cs = 0.0;    // F1, generation vs reference extractions
  double rg = 0.0;    // precision, generation extractions vs table
  double rg_f = 0.0;  // F1, generation extractions vs table
};

absl::StatusOr<ExtractiveScores> ExtractiveMetrics(
    const ExtractionSet& generation, const ExtractionSet& reference,
    const Table& table);

// Extractions JSONL: {"index": <int>, "pairs": [{"attribute", "value"}...]}.
// Duplicate indices are an error.
absl::StatusOr<std::map<int64_t, ExtractionSet>> LoadExtractions(
    const std::string& path);

}  // namespace parenteval

#endif  // PARENTEVAL_BASELINES_H_
