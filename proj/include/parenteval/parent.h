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

// PARENT: precision and recall of a generated text against both its
// reference and its table, with n-gram rewards weighted by an entailment
// model.
//
// Per n-gram order, entailed precision rewards a generated n-gram with 1 if
// it is matched (clipped) in the reference and with w(g) otherwise.
// Reference recall is clipped recall with every reference n-gram weighted
// by w(g), so that divergent reference content barely counts. Table recall
// is the mean over records of LCS(value, text) / |value|. The two recalls
// are combined geometrically, E_r = E_r(R)^(1 - lambda) * E_r(T)^lambda,
// and PARENT is the F1 of E_p and E_r.
//
// Smoothing: computed components equal to 0 are replaced by epsilon before
// any geometric combination. Orders with an empty denominator (text shorter
// than n, or all reference n-grams weighted 0) are left out of the geometric
// mean; if every order is left out the component is epsilon.

#ifndef PARENTEVAL_PARENT_H_
#define PARENTEVAL_PARENT_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "parenteval/corpus.h"
#include "parenteval/entailment.h"
#include "parenteval/ngrams.h"

namespace parenteval {

inline constexpr double kDefaultEpsilon = 1e-5;

struct ParentConfig {
  double epsilon = kDefaultEpsilon;
  // Unset: lambda = 1 - TableRecall(reference, table), per reference.
  std::optional<double> fixed_lambda;
  int max_order = kMaxNgramOrder;
  // Drops the entailment model: w(g) = 0 in precision, w(g) = 1 in recall.
  bool ablate_entailment = false;
  std::shared_ptr<const EntailmentModel> entailment;
};

absl::Status ValidateConfig(const ParentConfig& config);

using WeightFn = std::function<double(std::span<const Token>)>;

// Per-order values and their smoothed geometric mean. `raw[n-1]` is unset
// for excluded orders.
struct OrderScores {
  std::vector<std::optional<double>> raw;
  double combined = 0.0;

  // raw value with 0 replaced by epsilon; unset for excluded orders.
  std::optional<double> Smoothed(size_t index, double epsilon) const;
};

// Counts for orders 1..max_order.
std::vector<NGramCounts> CountAllOrders(std::span<const Token> seq,
                                        int max_order);

// An empty generation (every order excluded) scores epsilon.
OrderScores EntailedPrecision(std::span<const NGramCounts> generation,
                              std::span<const NGramCounts> reference,
                              const WeightFn& weight, double epsilon);

// Orders whose reference n-grams all have weight 0 are excluded. When every
// order is excluded the reference holds nothing to recall and scores 1.
OrderScores EntailedRecallReference(std::span<const NGramCounts> generation,
                                    std::span<const NGramCounts> reference,
                                    const WeightFn& weight, double epsilon);

// Unsmoothed (1/K) sum_k LCS(value_k, text) / |value_k|. Fails on an empty
// table.
absl::StatusOr<double> TableRecall(std::span<const Token> text,
                                   const Table& table);

// 1 - TableRecall(reference, table), clamped to [0, 1].
absl::StatusOr<double> AutoLambda(std::span<const Token> reference,
                                  const Table& table);

struct ParentScore {
  std::vector<std::optional<double>> precision_by_order;   // smoothed
  double e_p = 0.0;
  std::vector<std::optional<double>> recall_ref_by_order;  // smoothed
  double e_r_ref = 0.0;
  double e_r_table = 0.0;  // smoothed
  double lambda_used = 0.0;
  double e_r = 0.0;
  double f_score = 0.0;
  int chosen_reference_index = 0;
};

// Scores against every reference and keeps the best F; ties go to the lowest
// reference index.
absl::StatusOr<ParentScore> ParentInstance(const EvalInstance& instance,
                                           const ParentConfig& config);

struct CorpusScore {
  double mean_parent = 0.0;
  double mean_lambda = 0.0;
  size_t n_instances = 0;
  std::vector<ParentScore> per_instance;
};

// Macro-average of instance F-scores. Instances are scored on up to `jobs`
// threads; the result is identical for any `jobs`.
absl::StatusOr<CorpusScore> ParentCorpus(std::span<const EvalInstance> instances,
                                         const ParentConfig& config,
                                         int jobs = 1);

}  // namespace parenteval

#endif  // PARENTEVAL_PARENT_H_
