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

// Shared helpers for the test binaries: temporary files, random corpus
// generators and brute-force reference implementations. The oracles here
// deliberately avoid the library's counting code (NGramCounts, LcsLength)
// so they stay independent of what they check.

#ifndef PARENTEVAL_TESTS_TEST_UTIL_H_
#define PARENTEVAL_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "parenteval/corpus.h"
#include "parenteval/metaeval.h"
#include "parenteval/random.h"

namespace parenteval::testing {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("parenteval_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& content) const {
    const std::string p = (path_ / name).string();
    std::ofstream(p) << content;
    return p;
  }
  std::string Path(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline TokenSequence Toks(const std::string& s) { return Tokenize(s); }

inline Table MakeTable(
    const std::vector<std::pair<std::string, std::string>>& records) {
  Table t;
  for (const auto& [a, v] : records) {
    t.records.push_back({*AttributeTokens(a), Tokenize(v)});
  }
  return t;
}

inline EvalInstance MakeInstance(
    const std::vector<std::pair<std::string, std::string>>& records,
    const std::vector<std::string>& references, const std::string& generation) {
  EvalInstance inst;
  inst.table = MakeTable(records);
  for (const auto& r : references) inst.references.push_back(Tokenize(r));
  inst.generation = Tokenize(generation);
  return inst;
}

// Random text over a small vocabulary so that n-gram overlaps are common.
inline TokenSequence RandomSequence(Rng& rng, size_t min_len, size_t max_len,
                                    size_t vocab = 12) {
  const size_t len = min_len + rng.UniformIndex(max_len - min_len + 1);
  TokenSequence out;
  for (size_t i = 0; i < len; ++i) {
    out.push_back("w" + std::to_string(rng.UniformIndex(vocab)));
  }
  return out;
}

inline Table RandomTable(Rng& rng, size_t max_records = 4, size_t vocab = 12) {
  Table t;
  const size_t k = 1 + rng.UniformIndex(max_records);
  for (size_t i = 0; i < k; ++i) {
    t.records.push_back({{"a" + std::to_string(rng.UniformIndex(5))},
                         RandomSequence(rng, 1, 3, vocab)});
  }
  return t;
}

inline EvalInstance RandomInstance(Rng& rng, size_t max_refs = 1) {
  EvalInstance inst;
  inst.table = RandomTable(rng);
  const size_t refs = 1 + rng.UniformIndex(max_refs);
  for (size_t r = 0; r < refs; ++r) {
    inst.references.push_back(RandomSequence(rng, 1, 12));
  }
  inst.generation = RandomSequence(rng, 0, 12);
  return inst;
}

// ---- brute-force oracles -------------------------------------------------

using GramList = std::vector<std::vector<std::string>>;

inline GramList AllGrams(const TokenSequence& seq, size_t n) {
  GramList out;
  for (size_t i = 0; i + n <= seq.size(); ++i) {
    out.emplace_back(seq.begin() + i, seq.begin() + i + n);
  }
  return out;
}

inline long long Occurrences(const GramList& list,
                             const std::vector<std::string>& g) {
  return std::count(list.begin(), list.end(), g);
}

inline GramList Unique(GramList list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

// Modified (clipped) n-gram precision; negative when the generation has no
// n-grams of this order.
inline double OracleClippedPrecision(const TokenSequence& gen,
                                     const TokenSequence& ref, size_t n) {
  const GramList g = AllGrams(gen, n), r = AllGrams(ref, n);
  if (g.empty()) return -1.0;
  long long matched = 0;
  for (const auto& gram : Unique(g)) {
    matched += std::min(Occurrences(g, gram), Occurrences(r, gram));
  }
  return static_cast<double>(matched) / static_cast<double>(g.size());
}

// Clipped n-gram recall; negative when the reference has no n-grams.
inline double OracleClippedRecall(const TokenSequence& gen,
                                  const TokenSequence& ref, size_t n) {
  const GramList g = AllGrams(gen, n), r = AllGrams(ref, n);
  if (r.empty()) return -1.0;
  long long matched = 0;
  for (const auto& gram : Unique(r)) {
    matched += std::min(Occurrences(g, gram), Occurrences(r, gram));
  }
  return static_cast<double>(matched) / static_cast<double>(r.size());
}

// Classic O(|x||y|) LCS table, full matrix.
inline int OracleLcs(const TokenSequence& x, const TokenSequence& y) {
  std::vector<std::vector<int>> dp(x.size() + 1,
                                   std::vector<int>(y.size() + 1, 0));
  for (size_t i = 1; i <= x.size(); ++i) {
    for (size_t j = 1; j <= y.size(); ++j) {
      dp[i][j] = x[i - 1] == y[j - 1]
                     ? dp[i - 1][j - 1] + 1
                     : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[x.size()][y.size()];
}

// Corpus BLEU written straight from its definition: clipped counts against
// the max reference count, closest reference length (ties to the shorter),
// precisions floored at epsilon, uniform weights over `max_order`.
inline double OracleBleu(const std::vector<TokenSequence>& hyps,
                         const std::vector<std::vector<TokenSequence>>& clip_refs,
                         const std::vector<std::vector<TokenSequence>>& len_refs,
                         int max_order = 4, double epsilon = 1e-5) {
  std::vector<long long> matched(max_order, 0), total(max_order, 0);
  long long c = 0, r = 0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    const long long hl = static_cast<long long>(hyps[i].size());
    c += hl;
    long long best = -1;
    for (const auto& ref : len_refs[i]) {
      const long long rl = static_cast<long long>(ref.size());
      if (best < 0 || std::llabs(rl - hl) < std::llabs(best - hl) ||
          (std::llabs(rl - hl) == std::llabs(best - hl) && rl < best)) {
        best = rl;
      }
    }
    r += best;
    for (int n = 1; n <= max_order; ++n) {
      const GramList h = AllGrams(hyps[i], n);
      total[n - 1] += static_cast<long long>(h.size());
      for (const auto& gram : Unique(h)) {
        long long max_ref = 0;
        for (const auto& ref : clip_refs[i]) {
          max_ref = std::max(max_ref, Occurrences(AllGrams(ref, n), gram));
        }
        matched[n - 1] += std::min(Occurrences(h, gram), max_ref);
      }
    }
  }
  double log_sum = 0.0;
  for (int n = 0; n < max_order; ++n) {
    double p = total[n] > 0 ? static_cast<double>(matched[n]) / total[n] : 0.0;
    log_sum += std::log(p > 0.0 ? p : epsilon);
  }
  const double bp = c == 0 ? 0.0
                    : c < r ? std::exp(1.0 - static_cast<double>(r) / c)
                            : 1.0;
  return bp * std::exp(log_sum / max_order);
}

// Standard normal CDF and its inverse by bisection; independent of the
// library's quantile function.
inline double OracleNormalCdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

inline double OracleNormalQuantile(double p) {
  // Bisect on the smaller tail to keep full relative precision.
  const bool upper = p > 0.5;
  const double tail = upper ? 1.0 - p : p;
  double lo = -40.0, hi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (OracleNormalCdf(mid) < tail ? lo : hi) = mid;
  }
  const double x = 0.5 * (lo + hi);
  return upper ? -x : x;
}

// Four systems with latent human quality proportional to (-3, -1, 1, 3) and
// metric quality a = 0.8 * h/|h| + 0.6 * u/|u| with u orthogonal to h, so
// the system-level correlation between the two is exactly 0.8. Every
// instance compares every pair of systems; the winner is drawn with
// probability Phi(q_i - q_j), and the metric scores each output with
// Gaussian noise of standard deviation `noise`.
struct PlantedCorpus {
  JudgmentSet judgments;
  MetricScores metric;
  std::vector<double> metric_quality;
  std::vector<double> human_quality;
};

inline PlantedCorpus MakePlantedCorpus(uint64_t seed, int n_instances,
                                       double noise) {
  const std::vector<std::string> systems = {"s0", "s1", "s2", "s3"};
  const std::vector<double> h = {-3.0, -1.0, 1.0, 3.0};
  const std::vector<double> u = {1.0, -1.0, -1.0, 1.0};
  const double h_norm = std::sqrt(20.0);
  const double u_norm = 2.0;
  PlantedCorpus out;
  out.metric = MetricScores("planted");
  for (size_t i = 0; i < systems.size(); ++i) {
    out.human_quality.push_back(h[i] / h_norm);
    out.metric_quality.push_back(0.8 * h[i] / h_norm + 0.6 * u[i] / u_norm);
  }
  Rng rng(seed);
  std::vector<Comparison> comparisons;
  for (int k = 0; k < n_instances; ++k) {
    const std::string id = "i" + std::to_string(k);
    for (size_t i = 0; i < systems.size(); ++i) {
      (void)out.metric.Add(id, systems[i],
                           out.metric_quality[i] + noise * rng.Normal());
      for (size_t j = i + 1; j < systems.size(); ++j) {
        const double p_i = OracleNormalCdf(out.human_quality[i] -
                                           out.human_quality[j]);
        comparisons.push_back({id, systems[i], systems[j],
                               rng.Uniform01() < p_i ? Winner::kA
                                                     : Winner::kB});
      }
    }
  }
  out.judgments = MakeJudgmentSet(std::move(comparisons));
  return out;
}

}  // namespace parenteval::testing

#endif  // PARENTEVAL_TESTS_TEST_UTIL_H_
