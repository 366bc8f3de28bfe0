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

#include "kopt/moves.h"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace kopt {
namespace {

// Segment s runs from the right endpoint of slot s to the left endpoint of
// slot s + 1 (mod k).
int SegmentOf(int endpoint, int k) {
  return endpoint % 2 == 1 ? endpoint / 2 : (endpoint / 2 + k - 1) % k;
}

int OtherSegmentEnd(int endpoint, int k) {
  return endpoint % 2 == 1 ? (endpoint + 1) % (2 * k)
                           : (endpoint + 2 * k - 1) % (2 * k);
}

void ExtendMatchings(std::vector<int>& partner,
                     const std::function<void(const ConnectionPattern&)>& fn,
                     const std::function<ConnectionPattern(
                         const std::vector<int>&)>& make) {
  const int size = static_cast<int>(partner.size());
  int first = 0;
  while (first < size && partner[first] != -1) ++first;
  if (first == size) {
    fn(make(partner));
    return;
  }
  for (int q = first + 1; q < size; ++q) {
    if (partner[q] != -1) continue;
    partner[first] = q;
    partner[q] = first;
    ExtendMatchings(partner, fn, make);
    partner[first] = partner[q] = -1;
  }
}

}  // namespace

absl::StatusOr<ConnectionPattern> ConnectionPattern::FromPairs(
    int k, const std::vector<std::pair<int, int>>& pairs) {
  if (k < 1) return absl::InvalidArgumentError("k must be positive");
  if (static_cast<int>(pairs.size()) != k) {
    return absl::InvalidArgumentError(
        absl::StrCat("pattern needs ", k, " pairs, got ", pairs.size()));
  }
  std::vector<int> partner(2 * k, -1);
  for (auto [p, q] : pairs) {
    if (p < 0 || q < 0 || p >= 2 * k || q >= 2 * k || p == q) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad pattern pair {", p + 1, ",", q + 1, "}"));
    }
    if (partner[p] != -1 || partner[q] != -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("endpoint matched twice in pair {", p + 1, ",", q + 1,
                       "}"));
    }
    partner[p] = q;
    partner[q] = p;
  }
  return ConnectionPattern(std::move(partner));
}

ConnectionPattern ConnectionPattern::Identity(int k) {
  std::vector<int> partner(2 * k);
  for (int i = 0; i < k; ++i) {
    partner[2 * i] = 2 * i + 1;
    partner[2 * i + 1] = 2 * i;
  }
  return ConnectionPattern(std::move(partner));
}

std::vector<std::pair<int, int>> ConnectionPattern::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p) {
    if (p < partner_[p]) out.emplace_back(p, partner_[p]);
  }
  return out;
}

bool ConnectionPattern::IsIdentity() const {
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p) {
    if (partner_[p] != (p ^ 1)) return false;
  }
  return true;
}

void ForEachMatching(int k,
                     const std::function<void(const ConnectionPattern&)>& fn) {
  std::vector<int> partner(2 * k, -1);
  ExtendMatchings(partner, fn, [k](const std::vector<int>& p) {
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < 2 * k; ++e)
      if (e < p[e]) pairs.emplace_back(e, p[e]);
    return *ConnectionPattern::FromPairs(k, pairs);
  });
}

absl::StatusOr<std::vector<ConnectionPattern>> EnumerateMatchings(int k) {
  if (k < kMinMoveOrder || k > kMaxMoveOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "k = ", k, " outside [", kMinMoveOrder, ", ", kMaxMoveOrder, "]"));
  }
  std::vector<ConnectionPattern> out;
  ForEachMatching(k, [&out](const ConnectionPattern& m) { out.push_back(m); });
  return out;
}

bool IsValidPattern(const ConnectionPattern& m) {
  const int k = m.k();
  int endpoint = 1;  // right end of slot 0, i.e. the start of segment 0
  for (int visited = 1;; ++visited) {
    const int next = m.partner(endpoint);
    const int segment = SegmentOf(next, k);
    if (segment == SegmentOf(endpoint, k)) return false;
    if (segment == 0) return visited == k;
    endpoint = OtherSegmentEnd(next, k);
  }
}

absl::StatusOr<std::vector<ConnectionPattern>> EnumerateValidPatterns(int k) {
  if (k < kMinMoveOrder || k > kMaxMoveOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "k = ", k, " outside [", kMinMoveOrder, ", ", kMaxMoveOrder, "]"));
  }
  std::vector<ConnectionPattern> out;
  ForEachMatching(k, [&out](const ConnectionPattern& m) {
    if (IsValidPattern(m)) out.push_back(m);
  });
  return out;
}

InterferenceGraph BuildInterferenceGraph(const ConnectionPattern& m) {
  InterferenceGraph g;
  g.k = m.k();
  g.loop.assign(g.k, false);
  g.adjacency.assign(g.k, 0);
  for (auto [p, q] : m.pairs()) {
    const int i = std::min(p / 2, q / 2);
    const int j = std::max(p / 2, q / 2);
    if (i == j) {
      g.loop[i] = true;
      continue;
    }
    auto it = std::find(g.edges.begin(), g.edges.end(), std::make_pair(i, j));
    if (it != g.edges.end()) {
      ++g.multiplicity[it - g.edges.begin()];
      continue;
    }
    g.edges.emplace_back(i, j);
    g.multiplicity.push_back(1);
    g.adjacency[i] |= 1u << j;
    g.adjacency[j] |= 1u << i;
  }
  std::vector<int> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&g](int a, int b) { return g.edges[a] < g.edges[b]; });
  std::vector<std::pair<int, int>> edges;
  std::vector<int> multiplicity;
  for (int idx : order) {
    edges.push_back(g.edges[idx]);
    multiplicity.push_back(g.multiplicity[idx]);
  }
  g.edges = std::move(edges);
  g.multiplicity = std::move(multiplicity);
  return g;
}

bool ComponentsAreCyclesOrEdges(const InterferenceGraph& g) {
  // Degree with loops counted twice and parallel pairs counted separately.
  std::vector<int> degree(g.k, 0);
  for (int i = 0; i < g.k; ++i) degree[i] += g.loop[i] ? 2 : 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    degree[g.edges[e].first] += g.multiplicity[e];
    degree[g.edges[e].second] += g.multiplicity[e];
  }
  for (int i = 0; i < g.k; ++i) {
    if (degree[i] != 2) return false;
    const int simple_degree = std::popcount(g.adjacency[i]);
    if (g.loop[i] && simple_degree != 0) return false;
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (g.multiplicity[e] == 2) {
      auto [i, j] = g.edges[e];
      if (std::popcount(g.adjacency[i]) != 1 ||
          std::popcount(g.adjacency[j]) != 1) {
        return false;
      }
    }
  }
  return true;
}

Weight GainPartial(const Instance& inst, const Tour& tour,
                   const ConnectionPattern& m, const Embedding& f) {
  Weight gain = 0;
  for (int i = 0; i < m.k(); ++i) {
    if (f[i] == kUnplaced) continue;
    gain += inst.entry(tour.left(f[i]), tour.right(f[i]));
  }
  for (auto [p, q] : m.pairs()) {
    if (f[p / 2] == kUnplaced || f[q / 2] == kUnplaced) continue;
    gain -= inst.entry(EndpointVertex(tour, f, p), EndpointVertex(tour, f, q));
  }
  return gain;
}

KMove MakeMove(const Instance& inst, const Tour& tour,
               const ConnectionPattern& m, const Embedding& f) {
  KMove move;
  move.k = m.k();
  move.removed = f;
  std::sort(move.removed.begin(), move.removed.end());
  for (auto [p, q] : m.pairs()) {
    move.added.emplace_back(EndpointVertex(tour, f, p),
                            EndpointVertex(tour, f, q));
  }
  move.gain = GainPartial(inst, tour, m, f);
  move.pattern = m.pairs();
  move.embedding = f;
  return move;
}

nlohmann::json MoveToJson(const KMove& move) {
  nlohmann::json removed = nlohmann::json::array();
  for (int e : move.removed) removed.push_back(e + 1);
  nlohmann::json added = nlohmann::json::array();
  for (auto [u, v] : move.added) added.push_back({u + 1, v + 1});
  nlohmann::json pattern = nlohmann::json::array();
  for (auto [p, q] : move.pattern) pattern.push_back({p + 1, q + 1});
  nlohmann::json embedding = nlohmann::json::array();
  for (int e : move.embedding) embedding.push_back(e + 1);
  return {{"k", move.k},           {"removed", removed},
          {"added", added},        {"gain", move.gain},
          {"pattern", pattern},    {"embedding", embedding}};
}

absl::StatusOr<Tour> ApplyMove(const Instance& inst, const Tour& tour,
                               const ConnectionPattern& m, const Embedding& f) {
  const int n = tour.size();
  const int k = m.k();
  if (static_cast<int>(f.size()) != k) {
    return absl::InvalidArgumentError("embedding size differs from k");
  }
  if (n < k) {
    return absl::InvalidArgumentError(
        absl::StrCat("n = ", n, " is below k = ", k));
  }
  for (int i = 0; i < k; ++i) {
    if (f[i] < 0 || f[i] >= n || (i > 0 && f[i - 1] >= f[i])) {
      return absl::InvalidArgumentError(
          "embedding must be strictly increasing within [1, n]");
    }
  }

  std::vector<std::array<Vertex, 2>> adj(n);
  std::vector<int> degree(n, 0);
  bool degenerate = false;
  auto link = [&](Vertex u, Vertex v) {
    if (u == v || degree[u] == 2 || degree[v] == 2) {
      degenerate = true;
      return;
    }
    adj[u][degree[u]++] = v;
    adj[v][degree[v]++] = u;
  };
  for (int e = 0, i = 0; e < n; ++e) {
    if (i < k && f[i] == e) {
      ++i;
      continue;
    }
    link(tour.left(e), tour.right(e));
  }
  for (auto [p, q] : m.pairs()) {
    link(EndpointVertex(tour, f, p), EndpointVertex(tour, f, q));
  }
  if (degenerate) return absl::FailedPreconditionError("degenerate move");

  const Vertex start = tour.at(0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order{start};
  visited[start] = 1;
  Vertex prev = start;
  Vertex cur = (adj[start][0] == tour.at(1) || adj[start][1] == tour.at(1))
                   ? tour.at(1)
                   : std::min(adj[start][0], adj[start][1]);
  while (cur != start) {
    if (visited[cur]) return absl::FailedPreconditionError("degenerate move");
    visited[cur] = 1;
    order.push_back(cur);
    const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) {
    return absl::FailedPreconditionError("degenerate move");
  }

  absl::StatusOr<Tour> result = Tour::FromOrder(std::move(order), n);
  if (!result.ok()) return result.status();
  const Weight expected = TourWeight(inst, tour) - GainPartial(inst, tour, m, f);
  if (TourWeight(inst, *result) != expected) {
    return absl::InternalError("weight change differs from the move gain");
  }
  return result;
}

}  // namespace kopt
