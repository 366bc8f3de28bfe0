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

#include "kopt/oracle.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace kopt {
namespace {

// All perfect matchings of {0..size-1}, as partner arrays. Built by pairing
// the highest free point first, so the order differs from the main
// enumeration.
void Matchings(std::vector<int>& partner, int remaining,
               std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(partner);
    return;
  }
  int top = static_cast<int>(partner.size()) - 1;
  while (partner[top] != -1) --top;
  for (int q = top - 1; q >= 0; --q) {
    if (partner[q] != -1) continue;
    partner[top] = q;
    partner[q] = top;
    Matchings(partner, remaining - 2, out);
    partner[top] = partner[q] = -1;
  }
}

// The kept tour pieces join endpoint 2i+1 to endpoint 2i+2 (mod 2k). The
// move yields a tour iff pieces plus added edges form one cycle through all
// 2k endpoints.
bool FormsHamiltonCycle(const std::vector<int>& partner) {
  const int size = static_cast<int>(partner.size());
  auto piece = [size](int p) {
    return p % 2 == 1 ? (p + 1) % size : (p - 1 + size) % size;
  };
  int p = 0, steps = 0;
  do {
    p = piece(partner[p]);
    steps += 2;
  } while (p != 0 && steps <= size);
  return p == 0 && steps == size;
}

uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<uint64_t>(r);
}

}  // namespace

absl::StatusOr<OracleResult> NaiveBestMove(const Instance& inst,
                                           const Tour& tour, int k,
                                           uint64_t budget) {
  const int n = tour.size();
  if (k < 2 || n < k) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 2 <= k <= n (n=", n, ", k=", k, ")"));
  }
  if (inst.size() != n) {
    return absl::InvalidArgumentError("tour and instance sizes differ");
  }
  std::vector<std::vector<int>> patterns;
  {
    std::vector<std::vector<int>> all;
    std::vector<int> partner(2 * k, -1);
    if (k > 7) return absl::ResourceExhaustedError("k too large for oracle");
    Matchings(partner, 2 * k, all);
    for (auto& p : all) {
      if (FormsHamiltonCycle(p)) patterns.push_back(std::move(p));
    }
  }
  const uint64_t subsets = Binomial(n, k);
  if (subsets > budget / std::max<uint64_t>(1, patterns.size())) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "naive search needs ", subsets, " x ", patterns.size(),
        " candidates, budget is ", budget));
  }
  // Stable order for the reported pattern: sort partner arrays.
  std::sort(patterns.begin(), patterns.end());

  const std::vector<Vertex>& order = tour.order();
  auto node = [&](const std::vector<int>& e, int p) {
    const int edge = e[p / 2];
    return p % 2 == 0 ? order[edge] : order[(edge + 1) % n];
  };

  OracleResult best;
  bool have = false;
  std::vector<int> e(k);
  std::iota(e.begin(), e.end(), 0);
  while (true) {
    Weight removed = 0;
    for (int i = 0; i < k; ++i) {
      removed += inst.entry(order[e[i]], order[(e[i] + 1) % n]);
    }
    for (const std::vector<int>& partner : patterns) {
      ++best.candidates;
      Weight added = 0;
      for (int p = 0; p < 2 * k; ++p) {
        if (p < partner[p]) added += inst.entry(node(e, p), node(e, partner[p]));
      }
      const Weight gain = removed - added;
      if (!have || gain > best.gain) {
        have = true;
        best.gain = gain;
        best.embedding = e;
        best.pattern.clear();
        for (int p = 0; p < 2 * k; ++p) {
          if (p < partner[p]) best.pattern.emplace_back(p, partner[p]);
        }
      }
    }
    int i = k - 1;
    while (i >= 0 && e[i] == n - k + i) --i;
    if (i < 0) break;
    ++e[i];
    for (int j = i + 1; j < k; ++j) e[j] = e[j - 1] + 1;
  }
  return best;
}

absl::StatusOr<int> TreewidthBruteforce(const Graph& g) {
  const int n = g.size();
  if (n > kMaxBruteforceTreewidth) {
    return absl::InvalidArgumentError(absl::StrCat(
        "brute force treewidth supports at most ", kMaxBruteforceTreewidth,
        " vertices"));
  }
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n - 1;
  do {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) adj[u][v] = u != v && g.HasEdge(u, v);
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nb.push_back(u);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb)
        for (int b : nb)
          if (a != b) adj[a][b] = true;
      gone[v] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

absl::StatusOr<std::optional<Weight>> EnumerateBMonotoneMax(
    const Instance& inst, const Tour& tour, const ConnectionPattern& m,
    const BucketAssignment& b, const BucketPartition& part, uint64_t budget) {
  const int k = m.k();
  const int n = tour.size();
  if (static_cast<int>(b.size()) != k) {
    return absl::InvalidArgumentError("bucket assignment has wrong length");
  }
  if (inst.size() != n || part.n() != n) {
    return absl::InvalidArgumentError("instance, tour and buckets disagree");
  }
  for (int i = 0; i < k; ++i) {
    if (b[i] < 0 || b[i] >= part.count()) {
      return absl::InvalidArgumentError("bucket index out of range");
    }
  }
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<uint64_t>(part.size_of(b[i]));
    if (total > budget) {
      return absl::ResourceExhaustedError(
          absl::StrCat("exhaustive search exceeds budget ", budget));
    }
  }
  const std::vector<Vertex>& order = tour.order();
  std::optional<Weight> best;
  std::vector<int> f(k);
  auto visit = [&](auto&& self, int i) -> void {
    if (i == k) {
      Weight gain = 0;
      for (int s = 0; s < k; ++s) {
        gain += inst.entry(order[f[s]], order[(f[s] + 1) % n]);
      }
      for (int p = 0; p < 2 * k; ++p) {
        const int q = m.partner(p);
        if (p > q) continue;
        const Vertex u = p % 2 ? order[(f[p / 2] + 1) % n] : order[f[p / 2]];
        const Vertex v = q % 2 ? order[(f[q / 2] + 1) % n] : order[f[q / 2]];
        gain -= inst.entry(u, v);
      }
      if (!best || gain > *best) best = gain;
      return;
    }
    int lo = part.first(b[i]);
    if (i > 0 && b[i - 1] == b[i]) lo = std::max(lo, f[i - 1] + 1);
    for (int e = lo; e <= part.last(b[i]); ++e) {
      f[i] = e;
      self(self, i + 1);
    }
  };
  visit(visit, 0);
  return best;
}

std::optional<std::array<int, 3>> FindNegativeTriangle(
    const ReductionInput& input) {
  const auto& w = input.weights;
  for (int i = 0; i < input.n; ++i)
    for (int j = i + 1; j < input.n; ++j)
      for (int l = j + 1; l < input.n; ++l)
        if (w[i][j] + w[j][l] + w[i][l] < 0) return std::array<int, 3>{i, j, l};
  return std::nullopt;
}

}  // namespace kopt
