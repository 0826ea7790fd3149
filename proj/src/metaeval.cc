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

#include "parenteval/metaeval.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "parenteval/parallel.h"
#include "parenteval/random.h"

namespace parenteval {
namespace {

constexpr int kExactMcNemarLimit = 25;

// Judgments indexed for repeated resampling.
struct IndexedJudgments {
  std::vector<std::string> systems;
  std::vector<std::string> instance_ids;  // first-appearance order
  std::unordered_map<std::string, size_t> instance_index;
  // (winner, loser) system indices per instance.
  std::vector<std::vector<std::pair<int, int>>> outcomes;
};

IndexedJudgments IndexJudgments(const JudgmentSet& judgments) {
  IndexedJudgments out;
  out.systems = judgments.systems;
  std::unordered_map<std::string, int> sys;
  for (size_t i = 0; i < out.systems.size(); ++i) {
    sys[out.systems[i]] = static_cast<int>(i);
  }
  for (const Comparison& c : judgments.comparisons) {
    auto [it, inserted] =
        out.instance_index.emplace(c.instance_id, out.instance_ids.size());
    if (inserted) {
      out.instance_ids.push_back(c.instance_id);
      out.outcomes.emplace_back();
    }
    out.outcomes[it->second].emplace_back(sys.at(c.winner_id()),
                                          sys.at(c.loser_id()));
  }
  return out;
}

// Dense [instance][system] grid of metric scores.
absl::StatusOr<std::vector<std::vector<double>>> MetricGrid(
    const MetricScores& metric, const IndexedJudgments& index) {
  std::vector<std::vector<double>> grid(index.instance_ids.size());
  for (size_t i = 0; i < index.instance_ids.size(); ++i) {
    grid[i].reserve(index.systems.size());
    for (const std::string& s : index.systems) {
      const double* v = metric.Find(index.instance_ids[i], s);
      if (v == nullptr) {
        return absl::InvalidArgumentError(absl::StrCat(
            "metric \"", metric.name(), "\" has no score for instance \"",
            index.instance_ids[i], "\", system \"", s, "\""));
      }
      grid[i].push_back(*v);
    }
  }
  return grid;
}

WinMatrix SampleWins(const IndexedJudgments& index,
                     const std::vector<int>& multiplicity) {
  const size_t l = index.systems.size();
  WinMatrix wins(l, std::vector<double>(l, 0.0));
  for (size_t i = 0; i < index.outcomes.size(); ++i) {
    if (multiplicity[i] == 0) continue;
    for (const auto& [w, lo] : index.outcomes[i]) wins[w][lo] += multiplicity[i];
  }
  return wins;
}

std::vector<double> SampleMeans(const std::vector<std::vector<double>>& grid,
                                const std::vector<int>& multiplicity,
                                size_t n_systems) {
  std::vector<double> sums(n_systems, 0.0);
  double total = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (multiplicity[i] == 0) continue;
    for (size_t s = 0; s < n_systems; ++s) sums[s] += multiplicity[i] * grid[i][s];
    total += multiplicity[i];
  }
  for (double& v : sums) v /= total;
  return sums;
}

bool AllEqual(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
}

uint64_t Fnv1a(uint64_t hash, uint64_t value) {
  for (int b = 0; b < 8; ++b) {
    hash ^= (value >> (8 * b)) & 0xFF;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

}  // namespace

absl::StatusOr<double> Pearson(std::span<const double> x,
                               std::span<const double> y) {
  if (x.size() != y.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("length mismatch: ", x.size(), " vs ", y.size()));
  }
  if (x.size() < 2) {
    return absl::InvalidArgumentError("correlation needs at least 2 points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      return absl::InvalidArgumentError("non-finite value");
    }
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    return absl::FailedPreconditionError(
        "correlation undefined: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share ranks i+1..j+1.
    const double rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

absl::StatusOr<double> Spearman(std::span<const double> x,
                                std::span<const double> y) {
  if (x.size() != y.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("length mismatch: ", x.size(), " vs ", y.size()));
  }
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  return Pearson(rx, ry);
}

double NormalQuantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

absl::StatusOr<std::vector<double>> ThurstoneFromWins(const WinMatrix& wins) {
  const size_t l = wins.size();
  if (l < 2) return absl::InvalidArgumentError("need at least 2 systems");
  for (const auto& row : wins) {
    if (row.size() != l) return absl::InvalidArgumentError("ragged win matrix");
  }
  Eigen::MatrixXd normal = Eigen::MatrixXd::Ones(l, l);  // + 1 1^T anchor
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(l);
  std::vector<std::vector<int>> adjacent(l);
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = i + 1; j < l; ++j) {
      const double m = wins[i][j] + wins[j][i];
      if (m <= 0.0) continue;
      const double lo = 1.0 / (2.0 * m);
      const double p = std::clamp(wins[i][j] / m, lo, 1.0 - lo);
      const double z = NormalQuantile(p);
      normal(i, i) += 1.0;
      normal(j, j) += 1.0;
      normal(i, j) -= 1.0;
      normal(j, i) -= 1.0;
      rhs(i) += z;
      rhs(j) -= z;
      adjacent[i].push_back(static_cast<int>(j));
      adjacent[j].push_back(static_cast<int>(i));
    }
  }
  for (size_t i = 0; i < l; ++i) {
    if (adjacent[i].empty()) {
      return absl::FailedPreconditionError(
          absl::StrCat("system ", i, " has no comparisons"));
    }
  }
  std::vector<bool> seen(l, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  size_t reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adjacent[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  if (reached != l) {
    return absl::FailedPreconditionError("comparison graph is disconnected");
  }
  Eigen::VectorXd s = normal.ldlt().solve(rhs);
  const double mean = s.mean();
  std::vector<double> out(l);
  for (size_t i = 0; i < l; ++i) out[i] = s(i) - mean;
  return out;
}

absl::StatusOr<SystemScores> ThurstoneScores(const JudgmentSet& judgments) {
  if (judgments.systems.size() < 2) {
    return absl::InvalidArgumentError("need at least 2 systems");
  }
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < judgments.systems.size(); ++i) {
    index[judgments.systems[i]] = i;
  }
  const size_t l = judgments.systems.size();
  WinMatrix wins(l, std::vector<double>(l, 0.0));
  for (const Comparison& c : judgments.comparisons) {
    auto w = index.find(c.winner_id());
    auto lo = index.find(c.loser_id());
    if (w == index.end() || lo == index.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "comparison references unknown system in instance ", c.instance_id));
    }
    wins[w->second][lo->second] += 1.0;
  }
  auto scores = ThurstoneFromWins(wins);
  if (!scores.ok()) {
    if (absl::IsFailedPrecondition(scores.status())) {
      // Name the offending system when we can.
      for (size_t i = 0; i < l; ++i) {
        double m = 0.0;
        for (size_t j = 0; j < l; ++j) m += wins[i][j] + wins[j][i];
        if (m == 0.0) {
          return absl::FailedPreconditionError(absl::StrCat(
              "system \"", judgments.systems[i], "\" has no comparisons"));
        }
      }
    }
    return scores.status();
  }
  return SystemScores{judgments.systems, *std::move(scores)};
}

absl::Status MetricScores::Add(const std::string& instance_id,
                               const std::string& system, double score) {
  if (!std::isfinite(score)) {
    return absl::InvalidArgumentError("non-finite metric score");
  }
  if (!scores_.emplace(std::make_pair(instance_id, system), score).second) {
    return absl::InvalidArgumentError(absl::StrCat(
        "duplicate score for instance \"", instance_id, "\", system \"",
        system, "\""));
  }
  return absl::OkStatus();
}

const double* MetricScores::Find(const std::string& instance_id,
                                 const std::string& system) const {
  auto it = scores_.find(std::make_pair(instance_id, system));
  return it == scores_.end() ? nullptr : &it->second;
}

absl::StatusOr<MetricScores> LoadMetricScores(const std::string& path,
                                              const std::string& name) {
  MetricScores metric(name);
  absl::Status s = ForEachJsonLine(path, [&](int, const nlohmann::json& j) {
    if (!j.is_object()) return absl::InvalidArgumentError("expected an object");
    auto id = j.find("instance_id");
    auto sys = j.find("system");
    if (id == j.end() || !id->is_string() || sys == j.end() ||
        !sys->is_string()) {
      return absl::InvalidArgumentError(
          "\"instance_id\" and \"system\" must be strings");
    }
    auto score = j.find("score");
    if (score == j.end()) score = j.find("parent");
    if (score == j.end() || !score->is_number()) {
      return absl::InvalidArgumentError("\"score\" must be a number");
    }
    return metric.Add(id->get<std::string>(), sys->get<std::string>(),
                      score->get<double>());
  });
  if (!s.ok()) return s;
  return metric;
}

double Percentile(std::vector<double> samples, double q) {
  if (samples.empty()) return std::nan("");
  std::sort(samples.begin(), samples.end());
  const double h = std::clamp(q, 0.0, 1.0) * (samples.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, samples.size() - 1);
  return samples[lo] + (h - lo) * (samples[hi] - samples[lo]);
}

absl::StatusOr<std::vector<BootstrapResult>> BootstrapCorrelations(
    std::span<const MetricScores> metrics, const JudgmentSet& judgments,
    const BootstrapOptions& options) {
  if (options.iterations < 1) {
    return absl::InvalidArgumentError("iterations must be >= 1");
  }
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    return absl::InvalidArgumentError("alpha must lie in (0, 1)");
  }
  if (judgments.comparisons.empty()) {
    return absl::InvalidArgumentError("no judgments");
  }
  if (judgments.systems.size() < 2) {
    return absl::InvalidArgumentError("need at least 2 systems");
  }
  const IndexedJudgments index = IndexJudgments(judgments);
  std::vector<std::vector<std::vector<double>>> grids;
  for (const MetricScores& m : metrics) {
    auto grid = MetricGrid(m, index);
    if (!grid.ok()) return grid.status();
    grids.push_back(*std::move(grid));
  }

  const size_t n = index.instance_ids.size();
  const size_t l = index.systems.size();
  std::vector<double> frozen_human;
  if (options.freeze_human_scores) {
    auto full = ThurstoneFromWins(SampleWins(index, std::vector<int>(n, 1)));
    if (!full.ok()) return full.status();
    frozen_human = *std::move(full);
  }
  const size_t iterations = static_cast<size_t>(options.iterations);
  // correlations[it][metric]
  std::vector<std::vector<double>> correlations(iterations);
  std::vector<uint64_t> digests(iterations, 0);
  std::vector<absl::Status> errors(iterations);

  ParallelFor(iterations, options.jobs, [&](size_t it) {
    Rng rng(DeriveSeed(options.seed, it));
    std::vector<int> multiplicity(n);
    std::vector<double> human;
    bool drawn = false;
    for (int attempt = 0; attempt < options.max_redraws && !drawn; ++attempt) {
      std::fill(multiplicity.begin(), multiplicity.end(), 0);
      uint64_t digest = 0xCBF29CE484222325ULL;
      for (size_t k = 0; k < n; ++k) {
        const uint64_t pick = rng.UniformIndex(n);
        ++multiplicity[pick];
        digest = Fnv1a(digest, pick);
      }
      if (options.freeze_human_scores) {
        human = frozen_human;
      } else {
        auto scores = ThurstoneFromWins(SampleWins(index, multiplicity));
        if (!scores.ok() || AllEqual(*scores)) continue;
        human = *std::move(scores);
      }
      digests[it] = digest;
      drawn = true;
    }
    if (!drawn) {
      errors[it] = absl::FailedPreconditionError(absl::StrCat(
          "bootstrap iteration ", it, ": no usable sample after ",
          options.max_redraws, " draws"));
      return;
    }
    correlations[it].resize(grids.size());
    for (size_t m = 0; m < grids.size(); ++m) {
      const std::vector<double> means = SampleMeans(grids[m], multiplicity, l);
      auto r = Pearson(means, human);
      if (!r.ok()) {
        errors[it] = absl::Status(
            r.status().code(),
            absl::StrCat("metric \"", metrics[m].name(), "\", iteration ", it,
                         ": ", r.status().message()));
        return;
      }
      correlations[it][m] = *r;
    }
  });
  for (const absl::Status& s : errors) {
    if (!s.ok()) return s;
  }

  uint64_t sample_digest = 0xCBF29CE484222325ULL;
  for (uint64_t d : digests) sample_digest = Fnv1a(sample_digest, d);

  std::vector<BootstrapResult> out(metrics.size());
  for (size_t m = 0; m < metrics.size(); ++m) {
    BootstrapResult& r = out[m];
    r.metric = metrics[m].name();
    r.alpha = options.alpha;
    r.seed = options.seed;
    r.sample_digest = sample_digest;
    r.correlations.reserve(iterations);
    double sum = 0.0;
    for (size_t it = 0; it < iterations; ++it) {
      r.correlations.push_back(correlations[it][m]);
      sum += correlations[it][m];
    }
    r.mean = sum / static_cast<double>(iterations);
    r.ci_lower = Percentile(r.correlations, options.alpha / 2.0);
    r.ci_upper = Percentile(r.correlations, 1.0 - options.alpha / 2.0);
  }
  return out;
}

absl::StatusOr<BootstrapResult> BootstrapCorrelation(
    const MetricScores& metric, const JudgmentSet& judgments,
    const BootstrapOptions& options) {
  auto results = BootstrapCorrelations(std::span(&metric, 1), judgments,
                                       options);
  if (!results.ok()) return results.status();
  return std::move(results->front());
}

absl::StatusOr<double> SystemCorrelation(
    const MetricScores& metric, const JudgmentSet& judgments,
    std::span<const std::string> instance_ids) {
  if (judgments.systems.size() < 2) {
    return absl::InvalidArgumentError("need at least 2 systems");
  }
  const IndexedJudgments index = IndexJudgments(judgments);
  auto grid = MetricGrid(metric, index);
  if (!grid.ok()) return grid.status();
  std::vector<int> multiplicity(index.instance_ids.size(),
                                instance_ids.empty() ? 1 : 0);
  for (const std::string& id : instance_ids) {
    auto it = index.instance_index.find(id);
    if (it == index.instance_index.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("instance \"", id, "\" has no judgments"));
    }
    ++multiplicity[it->second];
  }
  auto human = ThurstoneFromWins(SampleWins(index, multiplicity));
  if (!human.ok()) return human.status();
  return Pearson(SampleMeans(*grid, multiplicity, index.systems.size()),
                 *human);
}

absl::StatusOr<CiDifference> CorrelationCiDifference(const BootstrapResult& a,
                                                     const BootstrapResult& b,
                                                     double alpha) {
  if (a.correlations.size() != b.correlations.size() || a.seed != b.seed ||
      a.sample_digest != b.sample_digest) {
    return absl::InvalidArgumentError(
        "bootstrap results are not paired (different samples)");
  }
  if (a.correlations.empty()) {
    return absl::InvalidArgumentError("empty bootstrap results");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError("alpha must lie in (0, 1)");
  }
  std::vector<double> diff(a.correlations.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    diff[i] = a.correlations[i] - b.correlations[i];
  }
  CiDifference out;
  out.lower = Percentile(diff, alpha / 2.0);
  out.upper = Percentile(diff, 1.0 - alpha / 2.0);
  out.significant = out.lower > 0.0;
  return out;
}

absl::StatusOr<std::vector<double>> PairwiseAgreement(
    const MetricScores& metric, const JudgmentSet& judgments) {
  std::vector<double> out;
  out.reserve(judgments.comparisons.size());
  for (const Comparison& c : judgments.comparisons) {
    const double* a = metric.Find(c.instance_id, c.system_a);
    const double* b = metric.Find(c.instance_id, c.system_b);
    if (a == nullptr || b == nullptr) {
      return absl::InvalidArgumentError(absl::StrCat(
          "metric \"", metric.name(), "\" is missing a score for instance \"",
          c.instance_id, "\""));
    }
    if (*a == *b) {
      out.push_back(0.5);
    } else {
      const bool metric_prefers_a = *a > *b;
      out.push_back(metric_prefers_a == (c.winner == Winner::kA) ? 1.0 : 0.0);
    }
  }
  return out;
}

absl::StatusOr<double> PairwiseAccuracy(const MetricScores& metric,
                                        const JudgmentSet& judgments) {
  if (judgments.comparisons.empty()) {
    return absl::InvalidArgumentError("no judgments");
  }
  auto agreement = PairwiseAgreement(metric, judgments);
  if (!agreement.ok()) return agreement.status();
  const double sum = std::accumulate(agreement->begin(), agreement->end(), 0.0);
  return sum / static_cast<double>(agreement->size());
}

double McNemarFromDiscordant(int64_t b, int64_t c) {
  const int64_t n = b + c;
  if (n == 0) return 1.0;
  if (n < kExactMcNemarLimit) {
    // 2 * P(X <= min(b, c)), X ~ Binomial(n, 1/2). Exact in double for n < 25.
    const int64_t k_max = std::min(b, c);
    double tail = 0.0;
    double binom = 1.0;  // C(n, k)
    for (int64_t k = 0; k <= k_max; ++k) {
      tail += binom;
      binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    return std::min(1.0, 2.0 * std::ldexp(tail, -static_cast<int>(n)));
  }
  const double diff = std::abs(static_cast<double>(b - c)) - 1.0;
  const double chi2 = diff * diff / static_cast<double>(n);
  // Survival function of chi-square with one degree of freedom.
  return std::erfc(std::sqrt(chi2 / 2.0));
}

absl::StatusOr<double> McNemarTest(const std::vector<bool>& a_correct,
                                   const std::vector<bool>& b_correct) {
  if (a_correct.size() != b_correct.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "length mismatch: ", a_correct.size(), " vs ", b_correct.size()));
  }
  int64_t b = 0, c = 0;
  for (size_t i = 0; i < a_correct.size(); ++i) {
    if (a_correct[i] && !b_correct[i]) ++b;
    if (!a_correct[i] && b_correct[i]) ++c;
  }
  return McNemarFromDiscordant(b, c);
}

absl::StatusOr<std::vector<LabeledInstance>> LoadEntailedLabels(
    const std::string& path) {
  std::vector<LabeledInstance> out;
  std::unordered_set<std::string> seen;
  absl::Status s = ForEachJsonLine(path, [&](int, const nlohmann::json& j) {
    if (!j.is_object()) return absl::InvalidArgumentError("expected an object");
    auto id = j.find("instance_id");
    auto entailed = j.find("entailed");
    if (id == j.end() || !id->is_string()) {
      return absl::InvalidArgumentError("\"instance_id\" must be a string");
    }
    if (entailed == j.end() || !entailed->is_boolean()) {
      return absl::InvalidArgumentError("\"entailed\" must be true or false");
    }
    if (!seen.insert(id->get<std::string>()).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate instance \"", id->get<std::string>(), "\""));
    }
    out.push_back({id->get<std::string>(), entailed->get<bool>()});
    return absl::OkStatus();
  });
  if (!s.ok()) return s;
  return out;
}

absl::StatusOr<std::vector<std::vector<std::string>>> EntailedProportionSlices(
    std::span<const LabeledInstance> labels, std::span<const double> proportions,
    size_t slice_size, uint64_t seed) {
  if (slice_size == 0) return absl::InvalidArgumentError("slice size is 0");
  std::vector<size_t> entailed, divergent;
  for (size_t i = 0; i < labels.size(); ++i) {
    (labels[i].entailed ? entailed : divergent).push_back(i);
  }
  // Partial Fisher-Yates: the first k entries become a uniform sample.
  auto sample = [](std::vector<size_t> pool, size_t k, Rng& rng) {
    for (size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.UniformIndex(pool.size() - i)]);
    }
    pool.resize(k);
    return pool;
  };
  std::vector<std::vector<std::string>> out;
  for (size_t p = 0; p < proportions.size(); ++p) {
    const double prop = proportions[p];
    if (!(prop >= 0.0 && prop <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("proportion ", prop, " outside [0, 1]"));
    }
    const size_t k = static_cast<size_t>(
        std::llround(prop * static_cast<double>(slice_size)));
    if (k > entailed.size() || slice_size - k > divergent.size()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "proportion ", prop, " with slice size ", slice_size, " needs ", k,
          " entailed and ", slice_size - k, " divergent instances; have ",
          entailed.size(), " and ", divergent.size()));
    }
    Rng rng(DeriveSeed(seed, p));
    std::vector<size_t> chosen = sample(entailed, k, rng);
    std::vector<size_t> rest = sample(divergent, slice_size - k, rng);
    chosen.insert(chosen.end(), rest.begin(), rest.end());
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::string> ids;
    ids.reserve(chosen.size());
    for (size_t i : chosen) ids.push_back(labels[i].instance_id);
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace parenteval
