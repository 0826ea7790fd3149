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

// Meta-evaluation: how well does an automatic metric agree with pairwise
// human preferences?
//
// System-level human scores come from Thurstone Case V scaling of the
// pairwise judgments. A metric's system-level score is the mean of its
// per-instance scores. Agreement is the Pearson correlation between the two,
// with bootstrap resampling over instances for confidence intervals and for
// paired significance tests between metrics. Instance-level agreement is
// measured by pairwise accuracy and compared with McNemar's test.

#ifndef PARENTEVAL_METAEVAL_H_
#define PARENTEVAL_METAEVAL_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "parenteval/corpus.h"

namespace parenteval {

// Product-moment correlation. Fails on length mismatch, fewer than two
// points, non-finite input or zero variance.
absl::StatusOr<double> Pearson(std::span<const double> x,
                               std::span<const double> y);

// Pearson on average ranks (ties share the mean rank).
absl::StatusOr<double> Spearman(std::span<const double> x,
                                std::span<const double> y);

// 1-based ranks; tied values get the mean of the ranks they span.
std::vector<double> AverageRanks(std::span<const double> values);

// Inverse of the standard normal CDF, p in (0, 1).
double NormalQuantile(double p);

struct SystemScores {
  std::vector<std::string> systems;
  std::vector<double> values;
};

// wins[i][j] = number of comparisons in which system i beat system j.
using WinMatrix = std::vector<std::vector<double>>;

// Thurstone Case V on a win matrix. For every pair with m comparisons the
// preference proportion is clipped to [1/(2m), 1 - 1/(2m)] and mapped
// through the normal quantile; scores are the least-squares solution of
// s_i - s_j = z_ij over compared pairs, shifted to mean 0.
// Fails if a system has no comparisons or the comparison graph is
// disconnected.
absl::StatusOr<std::vector<double>> ThurstoneFromWins(const WinMatrix& wins);

absl::StatusOr<SystemScores> ThurstoneScores(const JudgmentSet& judgments);

// Per-instance scores of one metric, keyed by (instance id, system).
class MetricScores {
 public:
  MetricScores() = default;
  explicit MetricScores(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  absl::Status Add(const std::string& instance_id, const std::string& system,
                   double score);
  const double* Find(const std::string& instance_id,
                     const std::string& system) const;
  size_t size() const { return scores_.size(); }

 private:
  std::string name_;
  std::map<std::pair<std::string, std::string>, double> scores_;
};

// JSONL: {"instance_id", "system", "score"}; "parent" is accepted in place of
// "score" so per-instance PARENT output can be used directly.
absl::StatusOr<MetricScores> LoadMetricScores(const std::string& path,
                                              const std::string& name);

struct BootstrapOptions {
  int iterations = 500;
  double alpha = 0.1;
  uint64_t seed = 0;
  int jobs = 1;
  // Draws per iteration before giving up on degenerate samples (a system
  // left without comparisons, a disconnected comparison graph, or constant
  // human scores).
  int max_redraws = 1000;
  // Use the full-data Thurstone scores in every iteration instead of
  // recomputing them on the resampled comparisons.
  bool freeze_human_scores = false;
};

struct BootstrapResult {
  std::string metric;
  std::vector<double> correlations;  // one per iteration, in order
  double mean = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  double alpha = 0.1;
  uint64_t seed = 0;
  // Digest of every iteration's resampled instance multiset; equal digests
  // mean two results were computed on identical samples.
  uint64_t sample_digest = 0;
};

// Resamples instance ids (the ids appearing in the judgments) with
// replacement. Every iteration recomputes Thurstone human scores on the
// sampled comparisons (unless frozen) and each metric's per-system mean over the sampled
// instances, both honoring multiplicity, and records their Pearson
// correlation. All metrics share the same samples, so their results are
// paired. Each metric must score every (instance, system) combination.
absl::StatusOr<std::vector<BootstrapResult>> BootstrapCorrelations(
    std::span<const MetricScores> metrics, const JudgmentSet& judgments,
    const BootstrapOptions& options);

absl::StatusOr<BootstrapResult> BootstrapCorrelation(
    const MetricScores& metric, const JudgmentSet& judgments,
    const BootstrapOptions& options);

// Pearson correlation between metric means and Thurstone scores restricted
// to the given instance ids (all instances when `instance_ids` is empty).
absl::StatusOr<double> SystemCorrelation(
    const MetricScores& metric, const JudgmentSet& judgments,
    std::span<const std::string> instance_ids = {});

// Linear-interpolation percentile, q in [0, 1].
double Percentile(std::vector<double> samples, double q);

struct CiDifference {
  double lower = 0.0;
  double upper = 0.0;
  bool significant = false;  // lower > 0
};

// Percentile interval of the per-iteration differences a - b at level
// 1 - alpha. Fails unless both results come from the same samples.
absl::StatusOr<CiDifference> CorrelationCiDifference(
    const BootstrapResult& a, const BootstrapResult& b, double alpha = 0.1);

// Per comparison: 1 if the metric scores the human winner higher, 0.5 on a
// metric tie, 0 otherwise.
absl::StatusOr<std::vector<double>> PairwiseAgreement(
    const MetricScores& metric, const JudgmentSet& judgments);

absl::StatusOr<double> PairwiseAccuracy(const MetricScores& metric,
                                        const JudgmentSet& judgments);

// Two-sided McNemar test on paired correctness flags. Exact binomial when
// the discordant count is below 25, otherwise chi-square with continuity
// correction.
absl::StatusOr<double> McNemarTest(const std::vector<bool>& a_correct,
                                   const std::vector<bool>& b_correct);
double McNemarFromDiscordant(int64_t b, int64_t c);

struct LabeledInstance {
  std::string instance_id;
  bool entailed = false;
};

absl::StatusOr<std::vector<LabeledInstance>> LoadEntailedLabels(
    const std::string& path);

// For each proportion p, samples round(p * slice_size) entailed and the rest
// divergent instances uniformly without replacement. Ids keep input order.
absl::StatusOr<std::vector<std::vector<std::string>>> EntailedProportionSlices(
    std::span<const LabeledInstance> labels, std::span<const double> proportions,
    size_t slice_size, uint64_t seed);

}  // namespace parenteval

#endif  // PARENTEVAL_METAEVAL_H_
