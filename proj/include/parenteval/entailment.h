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

// Entailment probability models w(g) = Pr(g <= T): the probability that an
// n-gram in a text is supported by the table it describes.
//
// Two models are provided. The word-overlap model counts the fraction of
// n-gram tokens that literally occur among the table's lexical items. The
// co-occurrence model learns Pr(t <= v) for text token t and table token v
// from table-reference pairs, scores a token by its best table item, and
// combines tokens of an n-gram with a geometric mean so that n-grams of
// different lengths get comparable probabilities.

#ifndef PARENTEVAL_ENTAILMENT_H_
#define PARENTEVAL_ENTAILMENT_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "parenteval/corpus.h"

namespace parenteval {

// w(g) for a single, already bound table.
class TableEntailment {
 public:
  virtual ~TableEntailment() = default;
  // Returns a probability in [0, 1]. `ngram` must be non-empty.
  virtual double NgramProb(std::span<const Token> ngram) const = 0;
};

class EntailmentModel {
 public:
  virtual ~EntailmentModel() = default;

  // Precomputes whatever the model needs about `table`. The returned object
  // references `table` and this model; both must outlive it.
  virtual std::unique_ptr<TableEntailment> Bind(const Table& table) const = 0;

  virtual std::string Name() const = 0;

  double NgramProb(std::span<const Token> ngram, const Table& table) const {
    return Bind(table)->NgramProb(ngram);
  }
};

// Fraction of tokens of `ngram` present in `items`.
double OverlapNgramProb(std::span<const Token> ngram, const TokenSet& items);

class WordOverlapModel : public EntailmentModel {
 public:
  std::unique_ptr<TableEntailment> Bind(const Table& table) const override;
  std::string Name() const override { return "word-overlap"; }
};

struct CoocEntry {
  Token text_token;
  Token table_token;
  double prob;

  bool operator==(const CoocEntry&) const = default;
};

class CooccurrenceModel : public EntailmentModel {
 public:
  CooccurrenceModel() = default;
  explicit CooccurrenceModel(int64_t trained_pair_count)
      : trained_pair_count_(trained_pair_count) {}

  // Stores Pr(text_token <= table_token). Fails for probabilities outside
  // [0, 1] and for duplicate keys.
  absl::Status Add(const Token& text_token, const Token& table_token,
                   double prob);

  // Pr(t <= v); 0 for pairs never stored.
  double Prob(const Token& text_token, const Token& table_token) const;

  int64_t trained_pair_count() const { return trained_pair_count_; }
  size_t size() const { return size_; }

  // All entries sorted by (text token, table token).
  std::vector<CoocEntry> Entries() const;

  std::unique_ptr<TableEntailment> Bind(const Table& table) const override;
  std::string Name() const override { return "cooccurrence"; }

  // text token -> (table token -> probability)
  using Index = std::unordered_map<Token, std::unordered_map<Token, double>>;
  const Index& index() const { return probs_; }

 private:
  int64_t trained_pair_count_ = 0;
  size_t size_ = 0;
  Index probs_;
};

struct CoocTrainingOptions {
  // Minimum number of pairs in which (t, v) co-occur for the entry to be
  // stored.
  int min_count = 1;
};

// Pr(t <= v) = #pairs with t in the reference and v in the table items
//            / #pairs with v in the table items.
absl::StatusOr<CooccurrenceModel> TrainCooccurrence(
    std::span<const TrainingPair> pairs, const CoocTrainingOptions& options = {});

// max over v in `items` of Pr(t <= v), or 1 when t itself is in `items`.
double CoocTokenProb(const Token& token, const TokenSet& items,
                     const CooccurrenceModel& model);
double CoocTokenProb(const Token& token, const Table& table,
                     const CooccurrenceModel& model);

// (prod p_j)^(1/n); 0 if any p_j is 0. 0 for an empty list.
double GeometricMeanProb(std::span<const double> token_probs);

double CoocNgramProb(std::span<const Token> ngram, const Table& table,
                     const CooccurrenceModel& model);

// TSV: "#pairs=<N>" header, then "<text_token>\t<table_token>\t<prob>"
// lines sorted by key. Probabilities are written in shortest round-trip form.
absl::Status SaveModel(const CooccurrenceModel& model, const std::string& path);
absl::StatusOr<CooccurrenceModel> LoadModel(const std::string& path);

}  // namespace parenteval

#endif  // PARENTEVAL_ENTAILMENT_H_
