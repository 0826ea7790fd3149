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

#include "parenteval/ngrams.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace parenteval {

absl::StatusOr<NGramCounts> CountNgrams(std::span<const Token> seq, int n) {
  if (n < 1 || n > kMaxNgramOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "n-gram order ", n, " outside [1, ", kMaxNgramOrder, "]"));
  }
  NGramCounts out;
  out.order_ = n;
  if (seq.size() < static_cast<size_t>(n)) return out;
  for (size_t i = 0; i + n <= seq.size(); ++i) {
    ++out.counts_[NGram(seq.begin() + i, seq.begin() + i + n)];
    ++out.total_;
  }
  return out;
}

absl::StatusOr<int> ClippedCount(const NGram& g, const NGramCounts& a,
                                 const NGramCounts& b) {
  if (a.order() != b.order()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "order mismatch: ", a.order(), " vs ", b.order()));
  }
  return std::min(a.Count(g), b.Count(g));
}

int LcsLength(std::span<const Token> x, std::span<const Token> y) {
  if (x.empty() || y.empty()) return 0;
  // Two-row table over y.
  std::vector<int> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < y.size(); ++j) {
      cur[j + 1] = x[i] == y[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

}  // namespace parenteval
