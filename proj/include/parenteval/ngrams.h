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

// N-gram multisets, clipped counts and longest-common-subsequence length.

#ifndef PARENTEVAL_NGRAMS_H_
#define PARENTEVAL_NGRAMS_H_

#include <map>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "parenteval/corpus.h"

namespace parenteval {

inline constexpr int kMaxNgramOrder = 4;

using NGram = std::vector<Token>;

// Sliding-window counts of all n-grams of one order in a sequence.
// Invariant: every count >= 1 and Total() == max(0, len - order + 1).
class NGramCounts {
 public:
  using Map = std::map<NGram, int>;

  NGramCounts() = default;

  int order() const { return order_; }
  const Map& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  int Count(const NGram& g) const {
    auto it = counts_.find(g);
    return it == counts_.end() ? 0 : it->second;
  }
  int Total() const { return total_; }

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

 private:
  friend absl::StatusOr<NGramCounts> CountNgrams(std::span<const Token>, int);

  int order_ = 1;
  int total_ = 0;
  Map counts_;
};

// Fails unless 1 <= n <= kMaxNgramOrder.
absl::StatusOr<NGramCounts> CountNgrams(std::span<const Token> seq, int n);

// min(count in a, count in b). Fails when the orders differ.
absl::StatusOr<int> ClippedCount(const NGram& g, const NGramCounts& a,
                                 const NGramCounts& b);

// Length of the longest common subsequence under exact token equality.
int LcsLength(std::span<const Token> x, std::span<const Token> y);

}  // namespace parenteval

#endif  // PARENTEVAL_NGRAMS_H_
