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

#ifndef KOPT_DP_ENGINE_H_
#define KOPT_DP_ENGINE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "kopt/buckets.h"
#include "kopt/decomp.h"
#include "kopt/instance.h"
#include "kopt/moves.h"
#include "kopt/rational.h"

namespace kopt {

inline constexpr int kMaxSolverOrder = 10;
// Upper bound on the entries of a single DP table.
inline constexpr uint64_t kMaxTableEntries = uint64_t{1} << 26;

struct DpStats {
  uint64_t solves = 0;
  uint64_t table_entries = 0;
};

struct SolveResult {
  // Absent when no b-monotone embedding exists.
  std::optional<Weight> gain;
  std::optional<Embedding> embedding;
  std::optional<KMove> move;
  // Where the driver found the move, in canonical enumeration order.
  int pattern_index = -1;
  uint64_t assignment_index = 0;
  BucketAssignment assignment;
};

// One DP table in mixed radix: entry index = sum of (f(bag[j]) - first[j]) *
// stride[j].
struct DpTable {
  std::vector<int> bag;
  std::vector<int> first;
  std::vector<int> radix;
  std::vector<std::optional<Weight>> values;
};

// Every node table of one solve, indexed like the decomposition nodes.
struct DpTrace {
  std::vector<DpTable> tables;
};

// Maximum M-gain over b-monotone embeddings, by dynamic programming over a
// nice tree decomposition of D_{M,b}:
//   leaf:      T[{}] = 0
//   introduce: T[f] = T'[f minus i] + w(e_f(i)) - w(added edges between i and
//              the bag)
//   forget:    T[f] = max over the forgotten value of T'
//   join:      T[f] = T1[f] + T2[f] - gain_M(f)
// Both children of a join already count the removed and added edges inside
// the bag, so gain_M(f) is subtracted once.
absl::StatusOr<SolveResult> SolveFixed(const Instance& inst, const Tour& tour,
                                       const ConnectionPattern& m,
                                       const BucketAssignment& b,
                                       const BucketPartition& part,
                                       const NiceTreeDecomposition& d,
                                       DpTrace* trace = nullptr,
                                       DpStats* stats = nullptr);

enum class Policy { kBest, kFirst };

struct SearchOptions {
  Rational alpha{1};
  Policy policy = Policy::kBest;
  int threads = 1;
};

// Bucket exponent used when none is given: the optimal global alpha per k.
Rational DefaultAlpha(int k);

// Runs SolveFixed for every valid pattern and every bucket assignment. kBest
// returns the maximum gain, ties going to the earliest (pattern, assignment)
// in canonical order; kFirst returns the first strictly improving result in
// that order, or the overall maximum when nothing improves. The returned move
// has been checked with ApplyMove.
absl::StatusOr<SolveResult> BestMove(const Instance& inst, const Tour& tour,
                                     int k, const SearchOptions& options,
                                     DpStats* stats = nullptr);

struct LocalSearchStep {
  int step = 0;
  Weight gain = 0;
  Weight weight = 0;  // tour weight after the step
  KMove move;
};

struct LocalSearchResult {
  Tour tour;
  Weight initial_weight = 0;
  std::vector<LocalSearchStep> history;
};

// Applies improving k-moves until none is left or max_steps is reached.
absl::StatusOr<LocalSearchResult> LocalSearch(const Instance& inst,
                                              const Tour& start, int k,
                                              const SearchOptions& options,
                                              int max_steps);

}  // namespace kopt

#endif  // KOPT_DP_ENGINE_H_
