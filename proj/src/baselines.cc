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
#include <cstdlib>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace parenteval {

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  if (matches.size() < other.matches.size()) {
    matches.resize(other.matches.size(), 0);
    totals.resize(other.totals.size(), 0);
  }
  for (size_t i = 0; i < other.matches.size(); ++i) {
    matches[i] += other.matches[i];
    totals[i] += other.totals[i];
  }
  hypothesis_length += other.hypothesis_length;
  reference_length += other.reference_length;
  return *this;
}

BleuStats ComputeBleuStats(std::span<const Token> hypothesis,
                           std::span<const TokenSequence> clip_references,
                           std::span<const TokenSequence> length_references,
                           int max_order) {
  BleuStats stats;
  stats.matches.assign(max_order, 0);
  stats.totals.assign(max_order, 0);
  stats.hypothesis_length = static_cast<int64_t>(hypothesis.size());

  const int64_t c = stats.hypothesis_length;
  bool have_length = false;
  for (const TokenSequence& ref : length_references) {
    const int64_t r = static_cast<int64_t>(ref.size());
    const int64_t best = stats.reference_length;
    if (!have_length || std::llabs(r - c) < std::llabs(best - c) ||
        (std::llabs(r - c) == std::llabs(best - c) && r < best)) {
      stats.reference_length = r;
      have_length = true;
    }
  }

  for (int n = 1; n <= max_order; ++n) {
    const NGramCounts hyp = *CountNgrams(hypothesis, n);
    if (hyp.empty()) continue;
    std::map<NGram, int> max_ref;
    for (const TokenSequence& ref : clip_references) {
      const NGramCounts ref_counts = *CountNgrams(ref, n);
      for (const auto& [g, count] : ref_counts) {
        int& slot = max_ref[g];
        slot = std::max(slot, count);
      }
    }
    int64_t matched = 0;
    for (const auto& [g, count] : hyp) {
      auto it = max_ref.find(g);
      if (it != max_ref.end()) matched += std::min(count, it->second);
    }
    stats.matches[n - 1] = matched;
    stats.totals[n - 1] = hyp.Total();
  }
  return stats;
}

BleuScore BleuFromStats(const BleuStats& stats, const BleuOptions& options) {
  BleuScore out;
  out.hypothesis_length = stats.hypothesis_length;
  out.reference_length = stats.reference_length;
  double log_sum = 0.0;
  for (int i = 0; i < options.max_order; ++i) {
    const int64_t total = i < static_cast<int>(stats.totals.size())
                              ? stats.totals[i] : 0;
    const int64_t matched = i < static_cast<int>(stats.matches.size())
                                ? stats.matches[i] : 0;
    double p = total > 0 ? static_cast<double>(matched) / total : 0.0;
    if (p <= 0.0) p = options.epsilon;
    out.precisions.push_back(p);
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(stats.hypothesis_length);
  const double r = static_cast<double>(stats.reference_length);
  if (c == 0.0) {
    out.brevity_penalty = 0.0;
  } else if (c < r) {
    out.brevity_penalty = std::exp(1.0 - r / c);
  } else {
    out.brevity_penalty = 1.0;
  }
  out.score = out.brevity_penalty * std::exp(log_sum / options.max_order);
  return out;
}

namespace {

absl::Status ValidateBleuOptions(const BleuOptions& options) {
  if (options.max_order < 1 || options.max_order > kMaxNgramOrder) {
    return absl::InvalidArgumentError("BLEU max_order outside [1, 4]");
  }
  if (!(options.epsilon > 0.0)) {
    return absl::InvalidArgumentError("BLEU epsilon must be positive");
  }
  return absl::OkStatus();
}

std::vector<TokenSequence> WithTableValues(const EvalInstance& instance) {
  std::vector<TokenSequence> refs = instance.references;
  for (const Record& r : instance.table.records) refs.push_back(r.value);
  return refs;
}

}  // namespace

absl::StatusOr<BleuScore> BleuCorpus(
    std::span<const TokenSequence> hypotheses,
    std::span<const std::vector<TokenSequence>> references,
    const BleuOptions& options) {
  if (absl::Status s = ValidateBleuOptions(options); !s.ok()) return s;
  if (hypotheses.size() != references.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(hypotheses.size(), " hypotheses but ", references.size(),
                     " reference lists"));
  }
  if (hypotheses.empty()) return absl::InvalidArgumentError("empty corpus");
  BleuStats total;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    if (references[i].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("instance ", i, " has no references"));
    }
    total += ComputeBleuStats(hypotheses[i], references[i], references[i],
                              options.max_order);
  }
  return BleuFromStats(total, options);
}

std::vector<BleuStats> InstanceBleuStats(std::span<const EvalInstance> instances,
                                         bool with_table, int max_order) {
  std::vector<BleuStats> out;
  out.reserve(instances.size());
  for (const EvalInstance& inst : instances) {
    if (with_table) {
      const std::vector<TokenSequence> clip = WithTableValues(inst);
      out.push_back(
          ComputeBleuStats(inst.generation, clip, inst.references, max_order));
    } else {
      out.push_back(ComputeBleuStats(inst.generation, inst.references,
                                     inst.references, max_order));
    }
  }
  return out;
}

namespace {

absl::StatusOr<BleuScore> BleuOverInstances(
    std::span<const EvalInstance> instances, bool with_table,
    const BleuOptions& options) {
  if (absl::Status s = ValidateBleuOptions(options); !s.ok()) return s;
  if (instances.empty()) return absl::InvalidArgumentError("empty corpus");
  for (size_t i = 0; i < instances.size(); ++i) {
    if (instances[i].references.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("instance ", i, " has no references"));
    }
  }
  BleuStats total;
  for (const BleuStats& s :
       InstanceBleuStats(instances, with_table, options.max_order)) {
    total += s;
  }
  return BleuFromStats(total, options);
}

}  // namespace

absl::StatusOr<BleuScore> BleuInstances(std::span<const EvalInstance> instances,
                                        const BleuOptions& options) {
  return BleuOverInstances(instances, false, options);
}

absl::StatusOr<BleuScore> BleuT(std::span<const EvalInstance> instances,
                                const BleuOptions& options) {
  return BleuOverInstances(instances, true, options);
}

ExtractionSet TablePairs(const Table& table) {
  ExtractionSet out;
  for (const Record& r : table.records) out.emplace(r.attribute, r.value);
  return out;
}

SetPrf CompareSets(const ExtractionSet& predicted, const ExtractionSet& target) {
  if (predicted.empty() && target.empty()) return {1.0, 1.0, 1.0};
  if (predicted.empty() || target.empty()) return {0.0, 0.0, 0.0};
  size_t common = 0;
  for (const AttributeValue& p : predicted) common += target.count(p);
  SetPrf out;
  out.precision = static_cast<double>(common) / predicted.size();
  out.recall = static_cast<double>(common) / target.size();
  const double sum = out.precision + out.recall;
  out.f = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

absl::StatusOr<ExtractiveScores> ExtractiveMetrics(
    const ExtractionSet& generation, const ExtractionSet& reference,
    const Table& table) {
  if (table.records.empty()) {
    return absl::InvalidArgumentError("table has no records");
  }
  const ExtractionSet table_pairs = TablePairs(table);
  const SetPrf vs_table = CompareSets(generation, table_pairs);
  ExtractiveScores out;
  out.cs = CompareSets(generation, reference).f;
  out.rg = vs_table.precision;
  out.rg_f = vs_table.f;
  return out;
}

absl::StatusOr<std::map<int64_t, ExtractionSet>> LoadExtractions(
    const std::string& path) {
  std::map<int64_t, ExtractionSet> out;
  absl::Status s = ForEachJsonLine(path, [&](int, const nlohmann::json& j) {
    if (!j.is_object()) return absl::InvalidArgumentError("expected an object");
    auto idx = j.find("index");
    if (idx == j.end() || !idx->is_number_integer()) {
      return absl::InvalidArgumentError("\"index\" must be an integer");
    }
    const int64_t index = idx->get<int64_t>();
    if (index < 0) return absl::InvalidArgumentError("negative index");
    auto pairs = j.find("pairs");
    if (pairs == j.end() || !pairs->is_array()) {
      return absl::InvalidArgumentError("\"pairs\" must be an array");
    }
    ExtractionSet set;
    if (!pairs->empty()) {
      auto table = ParseTable(*pairs);
      if (!table.ok()) return table.status();
      set = TablePairs(*table);
    }
    if (!out.emplace(index, std::move(set)).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate index ", index));
    }
    return absl::OkStatus();
  });
  if (!s.ok()) return s;
  return out;
}

}  // namespace parenteval
