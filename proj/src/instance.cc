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

#include "kopt/instance.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace kopt {

absl::StatusOr<Instance> Instance::FromMatrix(
    const std::vector<std::vector<Weight>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 3) return absl::InvalidArgumentError("n must be >= 3");
  std::vector<Weight> matrix(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(rows[u].size()) != n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row ", u + 1, " has ", rows[u].size(), " entries, expected ", n));
    }
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const Weight w = rows[u][v];
      if (w != rows[v][u]) {
        return absl::InvalidArgumentError(
            absl::StrCat("asymmetric weights at (", u + 1, ",", v + 1, ")"));
      }
      if (w > kMaxAbsWeight || w < -kMaxAbsWeight) {
        return absl::OutOfRangeError(absl::StrCat(
            "weight ", w, " at (", u + 1, ",", v + 1, ") exceeds 2^40"));
      }
      matrix[static_cast<size_t>(u) * n + v] = w;
    }
  }
  return Instance(n, Kind::kExplicitMatrix, std::move(matrix), {});
}

absl::StatusOr<Instance> Instance::FromCoordinates(std::vector<Point> coords) {
  const int n = static_cast<int>(coords.size());
  if (n < 3) return absl::InvalidArgumentError("n must be >= 3");
  std::vector<Weight> matrix(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = coords[u].x - coords[v].x;
      const double dy = coords[u].y - coords[v].y;
      const double d = std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);
      if (!(d <= static_cast<double>(kMaxAbsWeight))) {
        return absl::OutOfRangeError(absl::StrCat(
            "distance between nodes ", u + 1, " and ", v + 1,
            " exceeds 2^40"));
      }
      const Weight w = static_cast<Weight>(d);
      matrix[static_cast<size_t>(u) * n + v] = w;
      matrix[static_cast<size_t>(v) * n + u] = w;
    }
  }
  return Instance(n, Kind::kEuclidean2D, std::move(matrix), std::move(coords));
}

Weight Instance::max_abs_weight() const {
  Weight best = 0;
  for (Weight w : matrix_) best = std::max(best, w < 0 ? -w : w);
  return best;
}

Tour::Tour(std::vector<Vertex> order)
    : order_(std::move(order)), position_(order_.size()) {
  for (int i = 0; i < size(); ++i) position_[order_[i]] = i;
}

absl::StatusOr<Tour> Tour::FromOrder(std::vector<Vertex> order, int n) {
  if (static_cast<int>(order.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "tour has ", order.size(), " entries, instance has ", n, " vertices"));
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("tour vertex ", v + 1, " out of range 1..", n));
    }
    if (seen[v]) {
      return absl::InvalidArgumentError(
          absl::StrCat("tour visits vertex ", v + 1, " twice"));
    }
    seen[v] = 1;
  }
  return Tour(std::move(order));
}

Tour Tour::Identity(int n) {
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return Tour(std::move(order));
}

bool Tour::SameCycle(const Tour& other) const {
  if (size() != other.size()) return false;
  for (int e = 0; e < size(); ++e) {
    const int pu = other.position(left(e));
    const int pv = other.position(right(e));
    const int diff = std::abs(pu - pv);
    if (diff != 1 && diff != size() - 1) return false;
  }
  return true;
}

Weight TourWeight(const Instance& inst, const Tour& tour) {
  Weight total = 0;
  for (int e = 0; e < tour.size(); ++e) {
    total += inst.weight(tour.left(e), tour.right(e));
  }
  return total;
}

}  // namespace kopt
