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

#include "parenteval/parent.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parenteval/parallel.h"

namespace parenteval {
namespace {

double Floor(double value, double epsilon) {
  return value > 0.0 ? value : epsilon;
}

// Geometric mean of the included orders, each floored at epsilon.
// `all_excluded` is returned when no order has a defined value.
double CombineOrders(const std::vector<std::optional<double>>& raw,
                     double epsilon, double all_excluded) {
  double log_sum = 0.0;
  int included = 0;
  for (const auto& v : raw) {
    if (!v) continue;
    log_sum += std::log(Floor(*v, epsilon));
    ++included;
  }
  if (included == 0) return all_excluded;
  return std::exp(log_sum / included);
}

std::vector<std::optional<double>> SmoothedOrders(const OrderScores& scores,
                                                  double epsilon) {
  std::vector<std::optional<double>> out;
  out.reserve(scores.raw.size());
  for (size_t i = 0; i < scores.raw.size(); ++i) {
    out.push_back(scores.Smoothed(i, epsilon));
  }
  return out;
}

double FScore(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

}  // namespace

absl::Status ValidateConfig(const ParentConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1)");
  }
  if (config.fixed_lambda &&
      !(*config.fixed_lambda >= 0.0 && *config.fixed_lambda <= 1.0)) {
    return absl::InvalidArgumentError("lambda must lie in [0, 1]");
  }
  if (config.max_order < 1 || config.max_order > kMaxNgramOrder) {
    return absl::InvalidArgumentError(
        absl::StrCat("max_order must lie in [1, ", kMaxNgramOrder, "]"));
  }
  if (!config.ablate_entailment && config.entailment == nullptr) {
    return absl::InvalidArgumentError("no entailment model configured");
  }
  return absl::OkStatus();
}

std::optional<double> OrderScores::Smoothed(size_t index,
                                            double epsilon) const {
  if (index >= raw.size() || !raw[index]) return std::nullopt;
  return Floor(*raw[index], epsilon);
}

std::vector<NGramCounts> CountAllOrders(std::span<const Token> seq,
                                        int max_order) {
  std::vector<NGramCounts> out;
  out.reserve(max_order);
  for (int n = 1; n <= max_order; ++n) out.push_back(*CountNgrams(seq, n));
  return out;
}

OrderScores EntailedPrecision(std::span<const NGramCounts> generation,
                              std::span<const NGramCounts> reference,
                              const WeightFn& weight, double epsilon) {
  OrderScores out;
  const size_t orders = std::min(generation.size(), reference.size());
  out.raw.resize(orders);
  for (size_t i = 0; i < orders; ++i) {
    const NGramCounts& gen = generation[i];
    const NGramCounts& ref = reference[i];
    if (gen.Total() == 0) continue;
    double numerator = 0.0;
    for (const auto& [g, count] : gen) {
      const int clipped = std::min(count, ref.Count(g));
      // count * w + clipped * (1 - w), arranged so that fully matched
      // n-grams contribute exactly `count`.
      numerator += clipped;
      if (count > clipped) numerator += (count - clipped) * weight(g);
    }
    out.raw[i] = numerator / gen.Total();
  }
  out.combined = CombineOrders(out.raw, epsilon, /*all_excluded=*/epsilon);
  return out;
}

OrderScores EntailedRecallReference(std::span<const NGramCounts> generation,
                                    std::span<const NGramCounts> reference,
                                    const WeightFn& weight, double epsilon) {
  OrderScores out;
  const size_t orders = std::min(generation.size(), reference.size());
  out.raw.resize(orders);
  for (size_t i = 0; i < orders; ++i) {
    const NGramCounts& gen = generation[i];
    const NGramCounts& ref = reference[i];
    double numerator = 0.0;
    double denominator = 0.0;
    for (const auto& [g, count] : ref) {
      const double w = weight(g);
      if (w == 0.0) continue;
      numerator += std::min(count, gen.Count(g)) * w;
      denominator += count * w;
    }
    if (denominator > 0.0) out.raw[i] = numerator / denominator;
  }
  out.combined = CombineOrders(out.raw, epsilon, /*all_excluded=*/1.0);
  return out;
}

absl::StatusOr<double> TableRecall(std::span<const Token> text,
                                   const Table& table) {
  if (table.records.empty()) {
    return absl::InvalidArgumentError("table has no records");
  }
  double sum = 0.0;
  for (const Record& r : table.records) {
    if (r.value.empty()) {
      return absl::InvalidArgumentError("table record with empty value");
    }
    sum += static_cast<double>(LcsLength(r.value, text)) /
           static_cast<double>(r.value.size());
  }
  return sum / static_cast<double>(table.records.size());
}

absl::StatusOr<double> AutoLambda(std::span<const Token> reference,
                                  const Table& table) {
  auto recall = TableRecall(reference, table);
  if (!recall.ok()) return recall.status();
  return std::clamp(1.0 - *recall, 0.0, 1.0);
}

absl::StatusOr<ParentScore> ParentInstance(const EvalInstance& instance,
                                           const ParentConfig& config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  if (instance.references.empty()) {
    return absl::InvalidArgumentError("instance has no references");
  }
  const double eps = config.epsilon;

  WeightFn precision_weight, recall_weight;
  std::unique_ptr<TableEntailment> bound;
  if (config.ablate_entailment) {
    precision_weight = [](std::span<const Token>) { return 0.0; };
    recall_weight = [](std::span<const Token>) { return 1.0; };
  } else {
    bound = config.entailment->Bind(instance.table);
    precision_weight = [&bound](std::span<const Token> g) {
      return bound->NgramProb(g);
    };
    recall_weight = precision_weight;
  }

  const std::vector<NGramCounts> gen_counts =
      CountAllOrders(instance.generation, config.max_order);
  auto table_recall = TableRecall(instance.generation, instance.table);
  if (!table_recall.ok()) return table_recall.status();
  const double e_r_table = Floor(*table_recall, eps);

  std::optional<ParentScore> best;
  for (size_t r = 0; r < instance.references.size(); ++r) {
    const TokenSequence& reference = instance.references[r];
    if (reference.empty()) {
      return absl::InvalidArgumentError(absl::StrCat("reference ", r,
                                                     " is empty"));
    }
    const std::vector<NGramCounts> ref_counts =
        CountAllOrders(reference, config.max_order);
    OrderScores precision =
        EntailedPrecision(gen_counts, ref_counts, precision_weight, eps);
    OrderScores recall =
        EntailedRecallReference(gen_counts, ref_counts, recall_weight, eps);

    double lambda = 0.0;
    if (config.fixed_lambda) {
      lambda = *config.fixed_lambda;
    } else {
      auto auto_lambda = AutoLambda(reference, instance.table);
      if (!auto_lambda.ok()) return auto_lambda.status();
      lambda = *auto_lambda;
    }

    ParentScore score;
    score.precision_by_order = SmoothedOrders(precision, eps);
    score.e_p = precision.combined;
    score.recall_ref_by_order = SmoothedOrders(recall, eps);
    score.e_r_ref = recall.combined;
    score.e_r_table = e_r_table;
    score.lambda_used = lambda;
    score.e_r = std::pow(score.e_r_ref, 1.0 - lambda) *
                std::pow(score.e_r_table, lambda);
    score.f_score = FScore(score.e_p, score.e_r);
    score.chosen_reference_index = static_cast<int>(r);
    if (!best || score.f_score > best->f_score) best = std::move(score);
  }
  return *std::move(best);
}

absl::StatusOr<CorpusScore> ParentCorpus(std::span<const EvalInstance> instances,
                                         const ParentConfig& config,
                                         int jobs) {
  if (instances.empty()) {
    return absl::InvalidArgumentError("no instances to score");
  }
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  std::vector<absl::StatusOr<ParentScore>> results(
      instances.size(), absl::UnknownError("not scored"));
  ParallelFor(instances.size(), jobs, [&](size_t i) {
    results[i] = ParentInstance(instances[i], config);
  });

  CorpusScore corpus;
  corpus.n_instances = instances.size();
  corpus.per_instance.reserve(instances.size());
  double f_sum = 0.0;
  double lambda_sum = 0.0;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      return absl::Status(results[i].status().code(),
                          absl::StrCat("instance ", i, ": ",
                                       results[i].status().message()));
    }
    f_sum += results[i]->f_score;
    lambda_sum += results[i]->lambda_used;
    corpus.per_instance.push_back(*std::move(results[i]));
  }
  const double n = static_cast<double>(instances.size());
  corpus.mean_parent = f_sum / n;
  corpus.mean_lambda = lambda_sum / n;
  return corpus;
}

}  // namespace parenteval
