// Copyright 2026 The kopt Authors.
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

// Slow reference implementations used to cross-check the fast paths. They
// share no search code with the DP engine.

#ifndef KOPT_ORACLE_H_
#define KOPT_ORACLE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kopt/buckets.h"
#include "kopt/decomp.h"
#include "kopt/generators.h"
#include "kopt/instance.h"
#include "kopt/moves.h"

namespace kopt {

inline constexpr uint64_t kDefaultNaiveBudget = 100'000'000;
inline constexpr uint64_t kDefaultExhaustiveBudget = 10'000'000;
inline constexpr int kMaxBruteforceTreewidth = 8;

struct OracleResult {
  Weight gain = 0;
  std::vector<std::pair<int, int>> pattern;  // 0-based endpoint pairs
  Embedding embedding;
  uint64_t candidates = 0;
};

// Best k-move over every valid pattern and every strictly increasing
// embedding. Fails when C(n, k) times the pattern count exceeds the budget.
absl::StatusOr<OracleResult> NaiveBestMove(
    const Instance& inst, const Tour& tour, int k,
    uint64_t budget = kDefaultNaiveBudget);

// Treewidth by trying every elimination order.
absl::StatusOr<int> TreewidthBruteforce(const Graph& g);

// Maximum gain over every b-monotone embedding, or nullopt if none exists.
absl::StatusOr<std::optional<Weight>> EnumerateBMonotoneMax(
    const Instance& inst, const Tour& tour, const ConnectionPattern& m,
    const BucketAssignment& b, const BucketPartition& part,
    uint64_t budget = kDefaultExhaustiveBudget);

// First triangle (lexicographically) of negative total weight.
std::optional<std::array<int, 3>> FindNegativeTriangle(
    const ReductionInput& input);

inline bool HasNegativeTriangle(const ReductionInput& input) {
  return FindNegativeTriangle(input).has_value();
}

}  // namespace kopt

#endif  // KOPT_ORACLE_H_
