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

#ifndef KOPT_GENERATORS_H_
#define KOPT_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "kopt/instance.h"

namespace kopt {

// Symmetric weights drawn uniformly from [1, wmax]; deterministic per seed.
absl::StatusOr<Instance> GenerateRandom(int n, uint64_t seed, Weight wmax);

// Uniformly shuffled tour; deterministic per seed.
Tour RandomTour(int n, uint64_t seed);

// A Negative Edge-Weighted Triangle instance: a complete graph on n vertices
// with a symmetric integer matrix (diagonal ignored).
struct ReductionInput {
  int n = 0;
  std::vector<std::vector<Weight>> weights;
};

// Weights drawn uniformly from [-max_abs, max_abs].
ReductionInput RandomReductionInput(int n, uint64_t seed, Weight max_abs);

struct ReducedInstance {
  Instance instance;
  Tour tour;
  Weight m1 = 0;
  Weight m2 = 0;
};

// Builds the 4n-vertex 4-opt instance whose tour admits an improving 4-move
// iff the input has a triangle of negative total weight.
//
// Vertex layout (0-based): a_i = 2i, b_i = 2i + 1, a'_i = 2n + 2i,
// b'_i = 2n + 2i + 1. The tour is a_1 b_1 .. a_n b_n b'_n a'_n .. b'_1 a'_1.
// With M1 = 5W + 1 and M2 = 21 M1 + 1, where W is the largest absolute input
// weight:
//   w(a_i, b'_i) = 0
//   w(a_i, b_j) = w(i, j) for i < j,   w(a'_i, b_j) = w(i, j) for j < i
//   w(a_i, b_i) = M1,                  w(a'_i, b'_i) = -3 M1
//   w(b_i, a_{i+1}) = w(b'_i, a'_{i+1}) = w(a_1, a'_1) = w(b_n, b'_n) = -M2
//   every other pair weighs M2.
// With shift_nonnegative every weight is raised by M2; each 4-move removes
// and adds four edges, so gains are unchanged.
absl::StatusOr<ReducedInstance> ReduceNegativeTriangle(
    const ReductionInput& input, bool shift_nonnegative = false);

}  // namespace kopt

#endif  // KOPT_GENERATORS_H_
