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

#ifndef KOPT_INSTANCE_H_
#define KOPT_INSTANCE_H_

#include <cassert>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

namespace kopt {

// Vertices are 0-based in memory and 1-based in every file format.
using Vertex = int;
using Weight = int64_t;

// Any sum of a few dozen weights of this magnitude still fits in 64 bits.
inline constexpr Weight kMaxAbsWeight = Weight{1} << 40;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Complete undirected graph with integer edge weights, stored as a dense
// symmetric matrix with a zero diagonal.
class Instance {
 public:
  enum class Kind { kExplicitMatrix, kEuclidean2D };

  // Rows must form a square symmetric matrix of size >= 3. The diagonal is
  // ignored and stored as zero.
  static absl::StatusOr<Instance> FromMatrix(
      const std::vector<std::vector<Weight>>& rows);

  // Weights are Euclidean distances rounded half-up (TSPLIB nint).
  static absl::StatusOr<Instance> FromCoordinates(std::vector<Point> coords);

  int size() const { return n_; }
  Kind kind() const { return kind_; }
  const std::vector<Point>& coordinates() const { return coords_; }

  Weight weight(Vertex u, Vertex v) const {
    assert(u != v);
    return entry(u, v);
  }

  // Raw matrix entry; zero when u == v.
  Weight entry(Vertex u, Vertex v) const {
    return matrix_[static_cast<size_t>(u) * n_ + v];
  }

  Weight max_abs_weight() const;

  bool operator==(const Instance& other) const = default;

 private:
  Instance(int n, Kind kind, std::vector<Weight> matrix,
           std::vector<Point> coords)
      : n_(n),
        kind_(kind),
        matrix_(std::move(matrix)),
        coords_(std::move(coords)) {}

  int n_ = 0;
  Kind kind_ = Kind::kExplicitMatrix;
  std::vector<Weight> matrix_;
  std::vector<Point> coords_;
};

inline bool operator==(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

inline Weight EdgeWeight(const Instance& inst, Vertex u, Vertex v) {
  return inst.weight(u, v);
}

// A Hamiltonian cycle given as a cyclic vertex order w_0 .. w_{n-1}. Tour
// edge e joins its left endpoint w_e and its right endpoint w_{(e+1) mod n}.
class Tour {
 public:
  static absl::StatusOr<Tour> FromOrder(std::vector<Vertex> order, int n);
  static Tour Identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const { return order_; }
  Vertex at(int pos) const { return order_[pos]; }
  int position(Vertex v) const { return position_[v]; }

  Vertex left(int edge) const { return order_[edge]; }
  Vertex right(int edge) const {
    return order_[edge + 1 == size() ? 0 : edge + 1];
  }

  // True when both tours use the same undirected edge set.
  bool SameCycle(const Tour& other) const;

  bool operator==(const Tour& other) const { return order_ == other.order_; }

 private:
  explicit Tour(std::vector<Vertex> order);

  std::vector<Vertex> order_;
  std::vector<int> position_;
};

Weight TourWeight(const Instance& inst, const Tour& tour);

}  // namespace kopt

#endif  // KOPT_INSTANCE_H_
