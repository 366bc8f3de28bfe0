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

#include "kopt/generators.h"

#include <algorithm>
#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace kopt {

absl::StatusOr<Instance> GenerateRandom(int n, uint64_t seed, Weight wmax) {
  if (n < 5) return absl::InvalidArgumentError("random instances need n >= 5");
  if (wmax < 1 || wmax > kMaxAbsWeight) {
    return absl::InvalidArgumentError("wmax must be in [1, 2^40]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(1, wmax);
  std::vector<std::vector<Weight>> rows(n, std::vector<Weight>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      rows[u][v] = rows[v][u] = dist(rng);
    }
  }
  return Instance::FromMatrix(rows);
}

Tour RandomTour(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return *Tour::FromOrder(std::move(order), n);
}

ReductionInput RandomReductionInput(int n, uint64_t seed, Weight max_abs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(-max_abs, max_abs);
  ReductionInput input{n, std::vector<std::vector<Weight>>(
                              n, std::vector<Weight>(n, 0))};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      input.weights[u][v] = input.weights[v][u] = dist(rng);
    }
  }
  return input;
}

absl::StatusOr<ReducedInstance> ReduceNegativeTriangle(
    const ReductionInput& input, bool shift_nonnegative) {
  const int n = input.n;
  if (n < 3) return absl::InvalidArgumentError("n must be >= 3");
  if (static_cast<int>(input.weights.size()) != n) {
    return absl::InvalidArgumentError("weight matrix does not match n");
  }
  Weight max_abs = 0;
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(input.weights[u].size()) != n) {
      return absl::InvalidArgumentError("weight matrix is not square");
    }
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const Weight w = input.weights[u][v];
      if (w != input.weights[v][u]) {
        return absl::InvalidArgumentError(
            absl::StrCat("asymmetric weights at (", u + 1, ",", v + 1, ")"));
      }
      if (w > kMaxAbsWeight || w < -kMaxAbsWeight) {
        return absl::OutOfRangeError("input weight exceeds 2^40");
      }
      max_abs = std::max(max_abs, w < 0 ? -w : w);
    }
  }
  const Weight m1 = 5 * max_abs + 1;
  const Weight m2 = 21 * m1 + 1;
  const Weight largest = shift_nonnegative ? 2 * m2 : m2;
  if (largest > kMaxAbsWeight) {
    return absl::OutOfRangeError(absl::StrCat(
        "W = ", max_abs, " makes the reduced weights exceed 2^40"));
  }

  const int size = 4 * n;
  auto a = [](int i) { return 2 * i; };
  auto b = [](int i) { return 2 * i + 1; };
  auto a2 = [n](int i) { return 2 * n + 2 * i; };
  auto b2 = [n](int i) { return 2 * n + 2 * i + 1; };

  std::vector<std::vector<Weight>> rows(size, std::vector<Weight>(size, m2));
  auto set = [&rows](int u, int v, Weight w) { rows[u][v] = rows[v][u] = w; };
  for (int i = 0; i < n; ++i) {
    set(a(i), b2(i), 0);
    set(a(i), b(i), m1);
    set(a2(i), b2(i), -3 * m1);
    for (int j = 0; j < n; ++j) {
      if (i < j) set(a(i), b(j), input.weights[i][j]);
      if (j < i) set(a2(i), b(j), input.weights[i][j]);
    }
    if (i + 1 < n) {
      set(b(i), a(i + 1), -m2);
      set(b2(i), a2(i + 1), -m2);
    }
  }
  set(a(0), a2(0), -m2);
  set(b(n - 1), b2(n - 1), -m2);
  if (shift_nonnegative) {
    for (auto& row : rows)
      for (Weight& w : row) w += m2;
  }

  std::vector<Vertex> order;
  order.reserve(size);
  for (int i = 0; i < n; ++i) {
    order.push_back(a(i));
    order.push_back(b(i));
  }
  for (int i = n - 1; i >= 0; --i) {
    order.push_back(b2(i));
    order.push_back(a2(i));
  }
  absl::StatusOr<Instance> inst = Instance::FromMatrix(rows);
  if (!inst.ok()) return inst.status();
  absl::StatusOr<Tour> tour = Tour::FromOrder(std::move(order), size);
  if (!tour.ok()) return tour.status();
  return ReducedInstance{*std::move(inst), *std::move(tour), m1, m2};
}

}  // namespace kopt
