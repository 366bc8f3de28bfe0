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

#ifndef KOPT_MOVES_H_
#define KOPT_MOVES_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "kopt/instance.h"

namespace kopt {

inline constexpr int kMinMoveOrder = 2;
inline constexpr int kMaxMoveOrder = 12;

// Slot i of a k-move is the i-th removed tour edge in tour order. Its left
// endpoint is pattern endpoint 2i and its right endpoint is 2i + 1
// (all 0-based).
//
// A connection pattern is a perfect matching on the 2k endpoints: every
// matched pair becomes an added edge.
class ConnectionPattern {
 public:
  static absl::StatusOr<ConnectionPattern> FromPairs(
      int k, const std::vector<std::pair<int, int>>& pairs);

  // Re-adds every removed edge: pairs {2i, 2i + 1}.
  static ConnectionPattern Identity(int k);

  int k() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int endpoint) const { return partner_[endpoint]; }

  // Pairs (p, q) with p < q, ordered by p.
  std::vector<std::pair<int, int>> pairs() const;

  bool IsIdentity() const;

  bool operator==(const ConnectionPattern& other) const = default;

 private:
  explicit ConnectionPattern(std::vector<int> partner)
      : partner_(std::move(partner)) {}

  std::vector<int> partner_;
};

// Calls `fn` for every perfect matching on 2k endpoints in canonical order:
// the smallest unmatched endpoint is paired with each larger free endpoint in
// increasing order, recursively.
void ForEachMatching(int k,
                     const std::function<void(const ConnectionPattern&)>& fn);

// All (2k - 1)!! matchings in canonical order; k in [2, 12].
absl::StatusOr<std::vector<ConnectionPattern>> EnumerateMatchings(int k);

// True iff contracting the tour segment between consecutive removed edges
// (endpoint 2i + 1 with endpoint (2i + 2) mod 2k) turns the matching into a
// single cycle through all k segments without loops.
bool IsValidPattern(const ConnectionPattern& m);

// The valid subsequence of EnumerateMatchings(k), in the same order.
absl::StatusOr<std::vector<ConnectionPattern>> EnumerateValidPatterns(int k);

// I_M: slots i and j interfere when some pattern pair joins an endpoint of i
// to an endpoint of j.
struct InterferenceGraph {
  int k = 0;
  // Simple edges (i, j) with i < j, sorted.
  std::vector<std::pair<int, int>> edges;
  // Pairs of the pattern behind each edge: 2 marks a doubled single-edge
  // component.
  std::vector<int> multiplicity;
  // Slots whose pattern pair re-adds their own removed edge.
  std::vector<bool> loop;
  // Bitmask adjacency of the simple graph.
  std::vector<uint32_t> adjacency;
};

InterferenceGraph BuildInterferenceGraph(const ConnectionPattern& m);

// True iff every component of I_M is a cycle (a looped slot counts as a
// cycle of length one) or a doubled single edge.
bool ComponentsAreCyclesOrEdges(const InterferenceGraph& g);

// Embedding: slot -> tour edge index. Slots outside the domain of a partial
// embedding hold kUnplaced.
inline constexpr int kUnplaced = -1;
using Embedding = std::vector<int>;

inline Vertex EndpointVertex(const Tour& tour, const Embedding& f,
                             int endpoint) {
  const int edge = f[endpoint / 2];
  return endpoint % 2 == 0 ? tour.left(edge) : tour.right(edge);
}

// w(E^-_f) - w(E^+_f) over the placed slots of f, where E^+_f only holds
// pattern pairs with both endpoints placed.
Weight GainPartial(const Instance& inst, const Tour& tour,
                   const ConnectionPattern& m, const Embedding& f);

struct KMove {
  int k = 0;
  std::vector<int> removed;  // tour edge indices, ascending
  std::vector<std::pair<Vertex, Vertex>> added;
  Weight gain = 0;
  std::vector<std::pair<int, int>> pattern;
  Embedding embedding;
};

KMove MakeMove(const Instance& inst, const Tour& tour,
               const ConnectionPattern& m, const Embedding& f);

// {"k", "removed", "added", "gain", "pattern", "embedding"}, all 1-based.
nlohmann::json MoveToJson(const KMove& move);

// Replaces E^-_f by E^+_(f,M) and rebuilds the vertex order. Fails when f is
// not strictly increasing, n < k, the result is not a Hamiltonian cycle
// ("degenerate move"), or the weight change differs from -GainPartial.
absl::StatusOr<Tour> ApplyMove(const Instance& inst, const Tour& tour,
                               const ConnectionPattern& m, const Embedding& f);

}  // namespace kopt

#endif  // KOPT_MOVES_H_
