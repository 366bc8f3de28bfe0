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

#include "kopt/decomp.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace kopt {
namespace {

std::vector<int> Members(uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

uint32_t MaskOf(const std::vector<int>& bag) {
  uint32_t mask = 0;
  for (int v : bag) mask |= 1u << v;
  return mask;
}

uint32_t NeighborhoodOf(const Graph& g, uint32_t set) {
  uint32_t out = 0;
  for (uint32_t rest = set; rest; rest &= rest - 1) {
    out |= g.neighbors(std::countr_zero(rest));
  }
  return out;
}

// Number of vertices outside eliminated + v that v reaches through
// `eliminated`; the degree of v in the filled graph at elimination time.
int EliminationCost(const Graph& g, uint32_t eliminated, int v) {
  uint32_t component = 1u << v;
  uint32_t frontier = component;
  while (frontier) {
    const uint32_t grown = NeighborhoodOf(g, frontier) & eliminated & ~component;
    component |= grown;
    frontier = grown;
  }
  return std::popcount(NeighborhoodOf(g, component) & ~eliminated &
                       ~(1u << v));
}

// Shared validator over bags + parent links; `nice` adds node-kind rules.
ValidationReport Validate(const Graph& g,
                          const std::vector<uint32_t>& bags,
                          const std::vector<int>& parent,
                          const NiceTreeDecomposition* nice) {
  ValidationReport report;
  auto fail = [&report](std::string message) {
    report.ok = false;
    report.problems.push_back(std::move(message));
  };
  const int nodes = static_cast<int>(bags.size());
  const int k = g.size();
  if (nodes == 0) {
    if (k > 0) fail("decomposition has no nodes");
    return report;
  }

  int root = -1;
  for (int t = 0; t < nodes; ++t) {
    if (parent[t] == -1) {
      if (root != -1) fail(absl::StrCat("second root at node ", t));
      root = t;
    } else if (parent[t] < 0 || parent[t] >= nodes) {
      fail(absl::StrCat("node ", t, " has an invalid parent"));
      return report;
    }
  }
  if (root == -1) {
    fail("no root");
    return report;
  }
  for (int t = 0; t < nodes; ++t) {
    int steps = 0;
    for (int u = t; u != -1; u = parent[u]) {
      if (++steps > nodes) {
        fail(absl::StrCat("node ", t, " lies on a cycle"));
        return report;
      }
    }
  }

  uint32_t covered = 0;
  for (uint32_t bag : bags) covered |= bag;
  const uint32_t all = k == 32 ? ~0u : ((1u << k) - 1);
  for (int v : Members(all & ~covered)) {
    fail(absl::StrCat("vertex ", v + 1, " is in no bag"));
  }
  for (auto [u, v] : g.edges()) {
    const uint32_t pair = (1u << u) | (1u << v);
    bool found = false;
    for (uint32_t bag : bags) found = found || (bag & pair) == pair;
    if (!found) {
      fail(absl::StrCat("edge {", u + 1, ",", v + 1,
                        "} is not covered by any bag"));
    }
  }
  for (int v = 0; v < k; ++v) {
    int tops = 0;
    for (int t = 0; t < nodes; ++t) {
      if (!((bags[t] >> v) & 1u)) continue;
      if (parent[t] == -1 || !((bags[parent[t]] >> v) & 1u)) ++tops;
    }
    if (tops > 1) {
      fail(absl::StrCat("vertex ", v + 1,
                        ": bags do not form a connected subtree"));
    }
  }

  // Separation across each tree edge (t, parent[t]).
  std::vector<uint32_t> below(bags);
  std::vector<int> depth_order(nodes);
  for (int t = 0; t < nodes; ++t) depth_order[t] = t;
  std::vector<int> depth(nodes, 0);
  for (int t = 0; t < nodes; ++t)
    for (int u = parent[t]; u != -1; u = parent[u]) ++depth[t];
  std::sort(depth_order.begin(), depth_order.end(),
            [&depth](int a, int b) { return depth[a] > depth[b]; });
  for (int t : depth_order) {
    if (parent[t] != -1) below[parent[t]] |= below[t];
  }
  for (int t = 0; t < nodes; ++t) {
    if (parent[t] == -1) continue;
    uint32_t above = 0;
    for (int u = 0; u < nodes; ++u) {
      bool inside = false;
      for (int x = u; x != -1; x = parent[x]) inside = inside || x == t;
      if (!inside) above |= bags[u];
    }
    const uint32_t a = below[t];
    const uint32_t b = above;
    const uint32_t separator = bags[t] & bags[parent[t]];
    if ((a & b) != separator) {
      fail(absl::StrCat("tree edge ", t, "-", parent[t],
                        ": separator differs from the bag intersection"));
    }
    for (int u : Members(a & ~b)) {
      if (g.neighbors(u) & b & ~a) {
        fail(absl::StrCat("tree edge ", t, "-", parent[t], ": vertex ", u + 1,
                          " has a neighbour across the separation"));
      }
    }
  }

  if (nice != nullptr) {
    if (bags[root] != 0) fail("root bag is not empty");
    for (int t = 0; t < nodes; ++t) {
      const NiceNode& node = nice->nodes[t];
      const size_t kids = node.children.size();
      for (int c : node.children) {
        if (parent[c] != t) fail(absl::StrCat("node ", c, " parent mismatch"));
      }
      switch (node.kind) {
        case NodeKind::kLeaf:
          if (kids != 0 || bags[t] != 0)
            fail(absl::StrCat("leaf ", t, " must be childless and empty"));
          break;
        case NodeKind::kIntroduce:
          if (kids != 1 || node.vertex < 0 ||
              bags[t] != (bags[node.children[0]] | (1u << node.vertex)) ||
              ((bags[node.children[0]] >> node.vertex) & 1u)) {
            fail(absl::StrCat("introduce node ", t, " is malformed"));
          }
          break;
        case NodeKind::kForget:
          if (kids != 1 || node.vertex < 0 ||
              bags[t] != (bags[node.children[0]] & ~(1u << node.vertex)) ||
              !((bags[node.children[0]] >> node.vertex) & 1u)) {
            fail(absl::StrCat("forget node ", t, " is malformed"));
          }
          break;
        case NodeKind::kJoin:
          if (kids != 2 || bags[node.children[0]] != bags[t] ||
              bags[node.children[1]] != bags[t]) {
            fail(absl::StrCat("join node ", t, " is malformed"));
          }
          break;
      }
    }
  }
  return report;
}

}  // namespace

Graph::Graph(int size, const std::vector<std::pair<int, int>>& edges)
    : adj_(size, 0) {
  for (auto [u, v] : edges) AddEdge(u, v);
}

void Graph::AddEdge(int u, int v) {
  if (u == v) return;
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : Members(adj_[u]))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

Graph DependenceGraph(const InterferenceGraph& im, uint32_t order_edges) {
  Graph g(im.k, im.edges);
  for (int i = 0; i + 1 < im.k; ++i) {
    if ((order_edges >> i) & 1u) g.AddEdge(i, i + 1);
  }
  return g;
}

absl::StatusOr<TreewidthResult> TreewidthExact(const Graph& g) {
  const int k = g.size();
  if (k < 0 || k > kMaxTreewidthVertices) {
    return absl::InvalidArgumentError(absl::StrCat(
        "treewidth DP supports at most ", kMaxTreewidthVertices,
        " vertices, got ", k));
  }
  TreewidthResult result;
  if (k == 0) return result;
  const uint32_t full = (1u << k) - 1;
  // rest[S]: best achievable width for eliminating the complement of S once S
  // is gone.
  std::vector<uint8_t> rest(size_t{1} << k, 0);
  for (uint32_t s = full; s-- > 0;) {
    int best = std::numeric_limits<int>::max();
    for (uint32_t free = full & ~s; free; free &= free - 1) {
      const int v = std::countr_zero(free);
      const int cost =
          std::max<int>(EliminationCost(g, s, v), rest[s | (1u << v)]);
      best = std::min(best, cost);
    }
    rest[s] = static_cast<uint8_t>(best);
  }
  result.width = rest[0];
  // Smallest next vertex that still allows an optimal completion.
  uint32_t s = 0;
  while (s != full) {
    for (uint32_t free = full & ~s; free; free &= free - 1) {
      const int v = std::countr_zero(free);
      if (std::max<int>(EliminationCost(g, s, v), rest[s | (1u << v)]) <=
          result.width) {
        result.order.push_back(v);
        s |= 1u << v;
        break;
      }
    }
  }
  return result;
}

int EliminationWidth(const Graph& g, const std::vector<int>& order) {
  std::vector<uint32_t> adj(g.size());
  for (int v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v);
  uint32_t eliminated = 0;
  int width = 0;
  for (int v : order) {
    const uint32_t later = adj[v] & ~eliminated & ~(1u << v);
    width = std::max(width, std::popcount(later));
    for (int u : Members(later)) adj[u] |= later & ~(1u << u);
    eliminated |= 1u << v;
  }
  return width;
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

TreeDecomposition DecompositionFromOrder(const Graph& g,
                                         const std::vector<int>& order) {
  const int k = g.size();
  TreeDecomposition d;
  if (k == 0) return d;
  std::vector<int> position(k);
  for (int i = 0; i < k; ++i) position[order[i]] = i;
  std::vector<uint32_t> adj(k);
  for (int v = 0; v < k; ++v) adj[v] = g.neighbors(v);

  d.bags.resize(k);
  d.parent.assign(k, -1);
  uint32_t eliminated = 0;
  for (int i = 0; i < k; ++i) {
    const int v = order[i];
    const uint32_t later = adj[v] & ~eliminated & ~(1u << v);
    for (int u : Members(later)) adj[u] |= later & ~(1u << u);
    eliminated |= 1u << v;
    d.bags[i] = Members(later | (1u << v));
    int next = -1;
    for (int u : Members(later)) {
      if (next == -1 || position[u] < next) next = position[u];
    }
    d.parent[i] = next;
  }
  // Hang the roots of other components below the last bag.
  for (int i = 0; i + 1 < k; ++i) {
    if (d.parent[i] == -1) d.parent[i] = k - 1;
  }
  return d;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes)
    w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

NiceTreeDecomposition ToNice(const TreeDecomposition& d) {
  NiceTreeDecomposition nice;
  const int count = static_cast<int>(d.bags.size());
  auto add = [&nice](NodeKind kind, uint32_t bag, int vertex,
                     std::vector<int> children) {
    nice.nodes.push_back(NiceNode{kind, Members(bag), vertex,
                                  std::move(children)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  if (count == 0) {
    nice.root = add(NodeKind::kLeaf, 0, -1, {});
    return nice;
  }
  std::vector<std::vector<int>> children(count);
  int root = -1;
  for (int t = 0; t < count; ++t) {
    if (d.parent[t] == -1) {
      root = t;
    } else {
      children[d.parent[t]].push_back(t);
    }
  }

  // Returns a nice node whose bag equals bags[t] and whose subtree covers the
  // subtree of t.
  std::function<int(int)> build = [&](int t) -> int {
    const uint32_t bag = MaskOf(d.bags[t]);
    if (children[t].empty()) {
      int cur = add(NodeKind::kLeaf, 0, -1, {});
      uint32_t have = 0;
      for (int v : Members(bag)) {
        have |= 1u << v;
        cur = add(NodeKind::kIntroduce, have, v, {cur});
      }
      return cur;
    }
    std::vector<int> branches;
    for (int c : children[t]) {
      int cur = build(c);
      uint32_t have = MaskOf(d.bags[c]);
      for (int v : Members(have & ~bag)) {
        have &= ~(1u << v);
        cur = add(NodeKind::kForget, have, v, {cur});
      }
      for (int v : Members(bag & ~have)) {
        have |= 1u << v;
        cur = add(NodeKind::kIntroduce, have, v, {cur});
      }
      branches.push_back(cur);
    }
    int cur = branches[0];
    for (size_t j = 1; j < branches.size(); ++j) {
      cur = add(NodeKind::kJoin, bag, -1, {cur, branches[j]});
    }
    return cur;
  };

  int cur = build(root);
  uint32_t have = MaskOf(d.bags[root]);
  for (int v : Members(have)) {
    have &= ~(1u << v);
    cur = add(NodeKind::kForget, have, v, {cur});
  }
  nice.root = cur;
  return nice;
}

absl::StatusOr<NiceTreeDecomposition> OptimalNiceDecomposition(const Graph& g) {
  absl::StatusOr<TreewidthResult> tw = TreewidthExact(g);
  if (!tw.ok()) return tw.status();
  return ToNice(DecompositionFromOrder(g, tw->order));
}

ValidationReport ValidateDecomposition(const Graph& g,
                                       const TreeDecomposition& d) {
  std::vector<uint32_t> bags;
  for (const auto& bag : d.bags) {
    for (int v : bag) {
      if (v < 0 || v >= g.size()) {
        return {false, {absl::StrCat("bag holds unknown vertex ", v + 1)}};
      }
    }
    bags.push_back(MaskOf(bag));
  }
  if (d.parent.size() != d.bags.size()) {
    return {false, {"parent list does not match bag list"}};
  }
  return Validate(g, bags, d.parent, nullptr);
}

ValidationReport ValidateDecomposition(const Graph& g,
                                       const NiceTreeDecomposition& d) {
  const int count = static_cast<int>(d.nodes.size());
  std::vector<uint32_t> bags;
  std::vector<int> parent(count, -1);
  for (int t = 0; t < count; ++t) {
    for (int v : d.nodes[t].bag) {
      if (v < 0 || v >= g.size()) {
        return {false, {absl::StrCat("bag holds unknown vertex ", v + 1)}};
      }
    }
    bags.push_back(MaskOf(d.nodes[t].bag));
    for (int c : d.nodes[t].children) {
      if (c < 0 || c >= count) {
        return {false, {absl::StrCat("node ", t, " has an invalid child")}};
      }
      if (parent[c] != -1) {
        return {false, {absl::StrCat("node ", c, " has two parents")}};
      }
      parent[c] = t;
    }
  }
  if (d.root < 0 || d.root >= count || parent[d.root] != -1) {
    return {false, {"root is not a parentless node"}};
  }
  return Validate(g, bags, parent, &d);
}

std::string ToDot(const NiceTreeDecomposition& d) {
  std::string out = "graph decomposition {\n";
  for (size_t t = 0; t < d.nodes.size(); ++t) {
    const NiceNode& node = d.nodes[t];
    std::string kind;
    switch (node.kind) {
      case NodeKind::kLeaf:
        kind = "leaf";
        break;
      case NodeKind::kIntroduce:
        kind = absl::StrCat("introduce ", node.vertex + 1);
        break;
      case NodeKind::kForget:
        kind = absl::StrCat("forget ", node.vertex + 1);
        break;
      case NodeKind::kJoin:
        kind = "join";
        break;
    }
    std::vector<int> bag;
    for (int v : node.bag) bag.push_back(v + 1);
    absl::StrAppend(&out, "  n", t, " [label=\"", kind, " {",
                    absl::StrJoin(bag, ","), "}\"];\n");
    for (int c : node.children) absl::StrAppend(&out, "  n", t, " -- n", c, ";\n");
  }
  absl::StrAppend(&out, "}\n");
  return out;
}

}  // namespace kopt
