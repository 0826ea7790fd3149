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

// Data model and JSONL readers for tables, references, generations,
// co-occurrence training pairs and pairwise human judgments.
//
// All text is lowercased and split on whitespace; inputs are expected to be
// pre-tokenized (WikiBio style). Attribute names are additionally split on
// underscores, so "birth_date" contributes the tokens "birth" and "date".

#ifndef PARENTEVAL_CORPUS_H_
#define PARENTEVAL_CORPUS_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace parenteval {

using Token = std::string;
using TokenSequence = std::vector<Token>;
using TokenSet = std::unordered_set<Token>;

struct Record {
  TokenSequence attribute;  // non-empty
  TokenSequence value;      // non-empty

  bool operator==(const Record&) const = default;
};

// An ordered list of records, K >= 1 once validated.
struct Table {
  std::vector<Record> records;

  bool operator==(const Table&) const = default;
};

// One (table, references, generation) triple. `instance_id` and `system`
// are optional labels that are carried through to per-instance output so
// scores can later be joined with human judgments.
struct EvalInstance {
  Table table;
  std::vector<TokenSequence> references;
  TokenSequence generation;  // may be empty
  std::string instance_id;
  std::string system;

  bool operator==(const EvalInstance&) const = default;
};

struct TrainingPair {
  Table table;
  TokenSequence reference;
};

enum class Winner { kA, kB };

struct Comparison {
  std::string instance_id;
  std::string system_a;
  std::string system_b;
  Winner winner;

  const std::string& winner_id() const {
    return winner == Winner::kA ? system_a : system_b;
  }
  const std::string& loser_id() const {
    return winner == Winner::kA ? system_b : system_a;
  }
};

struct JudgmentSet {
  // Systems in order of first appearance in `comparisons`.
  std::vector<std::string> systems;
  std::vector<Comparison> comparisons;
  std::optional<std::vector<double>> per_system_scores;
};

// Lowercases and splits on whitespace. May return an empty sequence.
TokenSequence Tokenize(std::string_view raw);

// Lowercases and splits on whitespace and underscores. Fails on input that
// yields no tokens.
absl::StatusOr<TokenSequence> AttributeTokens(std::string_view raw);

// Union of all attribute and value tokens of the table.
TokenSet TableLexicalItems(const Table& table);

// Joins tokens with single spaces.
std::string JoinTokens(const TokenSequence& tokens);

// Parsers for a single JSON object. Errors do not carry a line number;
// the Load* functions below prefix one.
absl::StatusOr<Table> ParseTable(const nlohmann::json& j);
absl::StatusOr<EvalInstance> ParseInstance(const nlohmann::json& j);
absl::StatusOr<TrainingPair> ParsePair(const nlohmann::json& j);
absl::StatusOr<Comparison> ParseComparison(const nlohmann::json& j);

nlohmann::json TableToJson(const Table& table);
nlohmann::json InstanceToJson(const EvalInstance& instance);

absl::StatusOr<std::vector<EvalInstance>> LoadInstances(
    const std::string& path);
absl::StatusOr<std::vector<TrainingPair>> LoadPairs(const std::string& path);
absl::StatusOr<JudgmentSet> LoadJudgments(const std::string& path);

// Writes one JSON object per line in the instances schema.
absl::Status SaveInstances(const std::vector<EvalInstance>& instances,
                           const std::string& path);

// Builds a JudgmentSet, deriving the system list from the comparisons.
JudgmentSet MakeJudgmentSet(std::vector<Comparison> comparisons);

// Calls `fn(line_number, json)` for every non-blank line of a JSONL file.
// Parse errors and errors returned by `fn` are prefixed with
// "<path>:<line>: ".
absl::Status ForEachJsonLine(
    const std::string& path,
    const std::function<absl::Status(int, const nlohmann::json&)>& fn);

}  // namespace parenteval

#endif  // PARENTEVAL_CORPUS_H_
