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

#ifndef KOPT_DECOMP_H_
#define KOPT_DECOMP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kopt/moves.h"

namespace kopt {

inline constexpr int kMaxTreewidthVertices = 24;

// Simple undirected graph on vertices 0 .. size-1 with bitmask adjacency.
// Self loops and parallel edges collapse.
class Graph {
 public:
  explicit Graph(int size) : adj_(size, 0) {}
  Graph(int size, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(adj_.size()); }
  void AddEdge(int u, int v);
  bool HasEdge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  uint32_t neighbors(int v) const { return adj_[v]; }
  std::vector<std::pair<int, int>> edges() const;
  int degree(int v) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<uint32_t> adj_;
};

// D_{M,b} on slots 0 .. k-1 with edge set I_M plus O_b. Bit i of
// `order_edges` stands for the slot pair {i, i + 1}.
Graph DependenceGraph(const InterferenceGraph& im, uint32_t order_edges);

struct TreewidthResult {
  int width = 0;
  // Lexicographically smallest elimination order attaining `width`.
  std::vector<int> order;
};

// Exact treewidth by dynamic programming over the 2^k sets of already
// eliminated vertices. Eliminating v after the set S costs the number of
// vertices outside S + v that v reaches through S.
absl::StatusOr<TreewidthResult> TreewidthExact(const Graph& g);

// Largest number of later neighbours met while eliminating `order` with fill.
int EliminationWidth(const Graph& g, const std::vector<int>& order);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  std::vector<int> parent;             // -1 at the root
  int width() const;
};

// Fill-in construction: the bag of each eliminated vertex holds it and its
// later neighbours, hung below the bag of the earliest of those neighbours.
TreeDecomposition DecompositionFromOrder(const Graph& g,
                                         const std::vector<int>& order);

enum class NodeKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NodeKind kind = NodeKind::kLeaf;
  std::vector<int> bag;  // sorted
  int vertex = -1;       // introduced or forgotten vertex
  std::vector<int> children;
};

// Children always precede their parent in `nodes`, so index order is a valid
// bottom-up processing order.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width() const;
};

// Roots the decomposition, empties leaves and root, and splits every step
// into single-vertex introduce/forget nodes (ascending vertex order) and
// binary joins.
NiceTreeDecomposition ToNice(const TreeDecomposition& d);

// Builds an optimal-width nice decomposition of g.
absl::StatusOr<NiceTreeDecomposition> OptimalNiceDecomposition(const Graph& g);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Checks tree shape, (T1) coverage, (T2) edge coverage, (T3) connectivity, and
// that every tree edge induces a separation whose separator is the
// intersection of its two bags. The nice overload also checks node kinds.
ValidationReport ValidateDecomposition(const Graph& g,
                                       const TreeDecomposition& d);
ValidationReport ValidateDecomposition(const Graph& g,
                                       const NiceTreeDecomposition& d);

// DOT-style dump: one line per node with its kind and 1-based bag.
std::string ToDot(const NiceTreeDecomposition& d);

}  // namespace kopt

#endif  // KOPT_DECOMP_H_
