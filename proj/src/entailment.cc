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

#include "parenteval/entailment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace parenteval {
namespace {

class OverlapBinding : public TableEntailment {
 public:
  explicit OverlapBinding(const Table& table)
      : items_(TableLexicalItems(table)) {}

  double NgramProb(std::span<const Token> ngram) const override {
    return OverlapNgramProb(ngram, items_);
  }

 private:
  TokenSet items_;
};

class CoocBinding : public TableEntailment {
 public:
  CoocBinding(const Table& table, const CooccurrenceModel& model)
      : items_(TableLexicalItems(table)), model_(model) {}

  double NgramProb(std::span<const Token> ngram) const override {
    double product = 1.0;
    for (const Token& t : ngram) {
      auto it = cache_.find(t);
      if (it == cache_.end()) {
        it = cache_.emplace(t, CoocTokenProb(t, items_, model_)).first;
      }
      product *= it->second;
    }
    if (product == 0.0 || ngram.empty()) return 0.0;
    return std::pow(product, 1.0 / static_cast<double>(ngram.size()));
  }

 private:
  TokenSet items_;
  const CooccurrenceModel& model_;
  // Bindings are used from one thread at a time.
  mutable std::unordered_map<Token, double> cache_;
};

}  // namespace

double OverlapNgramProb(std::span<const Token> ngram, const TokenSet& items) {
  if (ngram.empty()) return 0.0;
  size_t hits = 0;
  for (const Token& t : ngram) hits += items.contains(t) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(ngram.size());
}

std::unique_ptr<TableEntailment> WordOverlapModel::Bind(
    const Table& table) const {
  return std::make_unique<OverlapBinding>(table);
}

absl::Status CooccurrenceModel::Add(const Token& text_token,
                                    const Token& table_token, double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("probability ", prob, " outside [0, 1]"));
  }
  auto [it, inserted] = probs_[text_token].emplace(table_token, prob);
  if (!inserted) {
    return absl::InvalidArgumentError(absl::StrCat(
        "duplicate entry (", text_token, ", ", table_token, ")"));
  }
  ++size_;
  return absl::OkStatus();
}

double CooccurrenceModel::Prob(const Token& text_token,
                               const Token& table_token) const {
  auto it = probs_.find(text_token);
  if (it == probs_.end()) return 0.0;
  auto jt = it->second.find(table_token);
  return jt == it->second.end() ? 0.0 : jt->second;
}

std::vector<CoocEntry> CooccurrenceModel::Entries() const {
  std::vector<CoocEntry> out;
  out.reserve(size_);
  for (const auto& [t, row] : probs_) {
    for (const auto& [v, p] : row) out.push_back({t, v, p});
  }
  std::sort(out.begin(), out.end(), [](const CoocEntry& a, const CoocEntry& b) {
    return std::tie(a.text_token, a.table_token) <
           std::tie(b.text_token, b.table_token);
  });
  return out;
}

std::unique_ptr<TableEntailment> CooccurrenceModel::Bind(
    const Table& table) const {
  return std::make_unique<CoocBinding>(table, *this);
}

absl::StatusOr<CooccurrenceModel> TrainCooccurrence(
    std::span<const TrainingPair> pairs, const CoocTrainingOptions& options) {
  if (pairs.empty()) {
    return absl::InvalidArgumentError("empty training set");
  }
  if (options.min_count < 1) {
    return absl::InvalidArgumentError("min_count must be >= 1");
  }
  std::unordered_map<Token, int64_t> item_count;
  std::unordered_map<Token, std::unordered_map<Token, int64_t>> joint;
  for (const TrainingPair& pair : pairs) {
    if (pair.reference.empty()) {
      return absl::InvalidArgumentError("training pair with empty reference");
    }
    const TokenSet items = TableLexicalItems(pair.table);
    const TokenSet text(pair.reference.begin(), pair.reference.end());
    for (const Token& v : items) ++item_count[v];
    for (const Token& t : text) {
      auto& row = joint[t];
      for (const Token& v : items) ++row[v];
    }
  }
  CooccurrenceModel model(static_cast<int64_t>(pairs.size()));
  for (const auto& [t, row] : joint) {
    for (const auto& [v, count] : row) {
      if (count < options.min_count) continue;
      const double p = static_cast<double>(count) /
                       static_cast<double>(item_count.at(v));
      absl::Status s = model.Add(t, v, p);
      if (!s.ok()) return s;
    }
  }
  return model;
}

double CoocTokenProb(const Token& token, const TokenSet& items,
                     const CooccurrenceModel& model) {
  if (items.contains(token)) return 1.0;
  auto row = model.index().find(token);
  if (row == model.index().end()) return 0.0;
  double best = 0.0;
  if (row->second.size() < items.size()) {
    for (const auto& [v, p] : row->second) {
      if (p > best && items.contains(v)) best = p;
    }
  } else {
    for (const Token& v : items) {
      auto it = row->second.find(v);
      if (it != row->second.end()) best = std::max(best, it->second);
    }
  }
  return best;
}

double CoocTokenProb(const Token& token, const Table& table,
                     const CooccurrenceModel& model) {
  return CoocTokenProb(token, TableLexicalItems(table), model);
}

double GeometricMeanProb(std::span<const double> token_probs) {
  if (token_probs.empty()) return 0.0;
  double product = 1.0;
  for (double p : token_probs) product *= p;
  if (product == 0.0) return 0.0;
  return std::pow(product, 1.0 / static_cast<double>(token_probs.size()));
}

double CoocNgramProb(std::span<const Token> ngram, const Table& table,
                     const CooccurrenceModel& model) {
  const TokenSet items = TableLexicalItems(table);
  std::vector<double> probs;
  probs.reserve(ngram.size());
  for (const Token& t : ngram) probs.push_back(CoocTokenProb(t, items, model));
  return GeometricMeanProb(probs);
}

absl::Status SaveModel(const CooccurrenceModel& model,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << "#pairs=" << model.trained_pair_count() << '\n';
  char buf[64];
  for (const CoocEntry& e : model.Entries()) {
    auto res = std::to_chars(buf, buf + sizeof(buf), e.prob);
    out << e.text_token << '\t' << e.table_token << '\t'
        << std::string_view(buf, res.ptr - buf) << '\n';
  }
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

absl::StatusOr<CooccurrenceModel> LoadModel(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::string line;
  auto error = [&](int line_no, const std::string& what) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ":", line_no, ": ", what));
  };
  if (!std::getline(in, line) || !line.starts_with("#pairs=")) {
    return error(1, "missing \"#pairs=<N>\" header");
  }
  int64_t n_pairs = 0;
  if (!absl::SimpleAtoi(line.substr(7), &n_pairs) || n_pairs < 0) {
    return error(1, "bad pair count in header");
  }
  CooccurrenceModel model(n_pairs);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields = absl::StrSplit(line, '\t');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      return error(line_no, "expected <text_token>\\t<table_token>\\t<prob>");
    }
    double p = 0.0;
    auto res = std::from_chars(fields[2].data(),
                               fields[2].data() + fields[2].size(), p);
    if (res.ec != std::errc() || res.ptr != fields[2].data() + fields[2].size()) {
      return error(line_no, absl::StrCat("bad probability \"", fields[2], "\""));
    }
    absl::Status s = model.Add(fields[0], fields[1], p);
    if (!s.ok()) return error(line_no, std::string(s.message()));
  }
  return model;
}

}  // namespace parenteval
