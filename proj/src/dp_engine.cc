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

#include "kopt/dp_engine.h"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "kopt/parallel.h"

namespace kopt {
namespace {

// Dense table with an explicit presence flag per entry.
struct Table {
  std::vector<int> bag;
  std::vector<uint64_t> stride;  // stride[j] for bag[j]
  std::vector<Weight> value;
  std::vector<uint8_t> present;
  // Forget nodes only: best value of the forgotten slot, as an offset.
  std::vector<int32_t> argmax;

  void Release() {
    std::vector<Weight>().swap(value);
    std::vector<uint8_t>().swap(present);
  }
};

class Solver {
 public:
  Solver(const Instance& inst, const Tour& tour, const ConnectionPattern& m,
         const BucketAssignment& b, const BucketPartition& part,
         const NiceTreeDecomposition& d)
      : inst_(inst), tour_(tour), m_(m), b_(b), part_(part), d_(d), k_(m.k()) {
    lo_.resize(k_);
    span_.resize(k_);
    for (int i = 0; i < k_; ++i) {
      lo_[i] = part.first(b[i]);
      span_[i] = part.size_of(b[i]);
    }
    edge_weight_.resize(tour.size());
    for (int e = 0; e < tour.size(); ++e) {
      edge_weight_[e] = inst.weight(tour.left(e), tour.right(e));
    }
  }

  absl::StatusOr<SolveResult> Run(DpTrace* trace, DpStats* stats);

 private:
  Vertex EndpointAt(int endpoint, int edge) const {
    return endpoint % 2 == 0 ? tour_.left(edge) : tour_.right(edge);
  }
  // w of the added edge {p, q} with slots placed on the given edges.
  Weight AddedWeight(int p, int ep, int q, int eq) const {
    return inst_.entry(EndpointAt(p, ep), EndpointAt(q, eq));
  }
  // b-monotone order constraint between slots i and i+1.
  bool Ordered(int i) const { return i + 1 < k_ && b_[i] == b_[i + 1]; }

  absl::Status Prepare(int t);
  void Introduce(int t);
  void Forget(int t);
  void Join(int t);

  const Instance& inst_;
  const Tour& tour_;
  const ConnectionPattern& m_;
  const BucketAssignment& b_;
  const BucketPartition& part_;
  const NiceTreeDecomposition& d_;
  const int k_;
  std::vector<int> lo_;
  std::vector<int> span_;
  std::vector<Weight> edge_weight_;
  std::vector<Table> tables_;
  uint64_t entries_ = 0;
};

// Position of v in the sorted bag, or -1.
int IndexIn(const std::vector<int>& bag, int v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  return it != bag.end() && *it == v ? static_cast<int>(it - bag.begin()) : -1;
}

// Visits every point of the mixed-radix box, first digit fastest.
template <typename Fn>
void ForEachPoint(const std::vector<int>& radix, Fn fn) {
  std::vector<int> digit(radix.size(), 0);
  uint64_t index = 0;
  while (true) {
    fn(index, digit);
    ++index;
    size_t j = 0;
    while (j < digit.size() && ++digit[j] == radix[j]) digit[j++] = 0;
    if (j == digit.size()) return;
  }
}

absl::Status Solver::Prepare(int t) {
  Table& table = tables_[t];
  table.bag = d_.nodes[t].bag;
  table.stride.resize(table.bag.size());
  uint64_t size = 1;
  for (size_t j = 0; j < table.bag.size(); ++j) {
    table.stride[j] = size;
    size *= static_cast<uint64_t>(span_[table.bag[j]]);
    if (size > kMaxTableEntries) {
      return absl::ResourceExhaustedError(
          absl::StrCat("DP table at node ", t, " exceeds ", kMaxTableEntries,
                       " entries; use a smaller alpha"));
    }
  }
  table.value.assign(size, 0);
  table.present.assign(size, 0);
  entries_ += size;
  return absl::OkStatus();
}

std::vector<int> Radix(const std::vector<int>& bag,
                       const std::vector<int>& span) {
  std::vector<int> radix(bag.size());
  for (size_t j = 0; j < bag.size(); ++j) radix[j] = span[bag[j]];
  return radix;
}

void Solver::Introduce(int t) {
  const NiceNode& node = d_.nodes[t];
  Table& table = tables_[t];
  const Table& child = tables_[node.children[0]];
  const int i = node.vertex;
  const int pos = IndexIn(table.bag, i);

  // Stride in the child table for each bag position of t.
  std::vector<uint64_t> child_stride(table.bag.size(), 0);
  for (size_t j = 0; j < table.bag.size(); ++j) {
    if (static_cast<int>(j) != pos) {
      child_stride[j] = child.stride[IndexIn(child.bag, table.bag[j])];
    }
  }
  // Added edges from the endpoints of i to slots in the bag.
  struct Added {
    int p, q, qpos;
  };
  std::vector<Added> added;
  for (int p : {2 * i, 2 * i + 1}) {
    const int q = m_.partner(p);
    if (q / 2 == i && q < p) continue;
    const int qpos = IndexIn(table.bag, q / 2);
    if (qpos >= 0) added.push_back({p, q, qpos});
  }
  // Order constraints with neighbours present in the bag.
  const int prev_pos = i > 0 && Ordered(i - 1) ? IndexIn(table.bag, i - 1) : -1;
  const int next_pos = Ordered(i) ? IndexIn(table.bag, i + 1) : -1;

  ForEachPoint(Radix(table.bag, span_), [&](uint64_t index,
                                            const std::vector<int>& digit) {
    const int fi = lo_[i] + digit[pos];
    if (prev_pos >= 0 && lo_[i - 1] + digit[prev_pos] >= fi) return;
    if (next_pos >= 0 && fi >= lo_[i + 1] + digit[next_pos]) return;
    uint64_t child_index = 0;
    for (size_t j = 0; j < digit.size(); ++j) {
      child_index += child_stride[j] * digit[j];
    }
    if (!child.present[child_index]) return;
    Weight v = child.value[child_index] + edge_weight_[fi];
    for (const Added& a : added) {
      const int q_slot = a.q / 2;
      v -= AddedWeight(a.p, fi, a.q, lo_[q_slot] + digit[a.qpos]);
    }
    table.value[index] = v;
    table.present[index] = 1;
  });
}

void Solver::Forget(int t) {
  const NiceNode& node = d_.nodes[t];
  Table& table = tables_[t];
  const Table& child = tables_[node.children[0]];
  const int i = node.vertex;
  std::vector<uint64_t> child_stride(table.bag.size());
  for (size_t j = 0; j < table.bag.size(); ++j) {
    child_stride[j] = child.stride[IndexIn(child.bag, table.bag[j])];
  }
  const uint64_t step = child.stride[IndexIn(child.bag, i)];
  table.argmax.assign(table.value.size(), -1);

  ForEachPoint(Radix(table.bag, span_), [&](uint64_t index,
                                            const std::vector<int>& digit) {
    uint64_t base = 0;
    for (size_t j = 0; j < digit.size(); ++j) base += child_stride[j] * digit[j];
    for (int v = 0; v < span_[i]; ++v) {
      const uint64_t c = base + step * v;
      if (!child.present[c]) continue;
      if (!table.present[index] || child.value[c] > table.value[index]) {
        table.value[index] = child.value[c];
        table.present[index] = 1;
        table.argmax[index] = v;
      }
    }
  });
}

void Solver::Join(int t) {
  const NiceNode& node = d_.nodes[t];
  Table& table = tables_[t];
  const Table& left = tables_[node.children[0]];
  const Table& right = tables_[node.children[1]];
  // Pattern pairs with both slots in the bag, each counted once.
  std::vector<std::pair<int, int>> inner;
  for (int p = 0; p < 2 * k_; ++p) {
    const int q = m_.partner(p);
    if (p < q && IndexIn(table.bag, p / 2) >= 0 &&
        IndexIn(table.bag, q / 2) >= 0) {
      inner.emplace_back(p, q);
    }
  }
  ForEachPoint(Radix(table.bag, span_), [&](uint64_t index,
                                            const std::vector<int>& digit) {
    if (!left.present[index] || !right.present[index]) return;
    Weight gain = 0;
    for (size_t j = 0; j < digit.size(); ++j) {
      gain += edge_weight_[lo_[table.bag[j]] + digit[j]];
    }
    for (const auto& [p, q] : inner) {
      const int pe = lo_[p / 2] + digit[IndexIn(table.bag, p / 2)];
      const int qe = lo_[q / 2] + digit[IndexIn(table.bag, q / 2)];
      gain -= AddedWeight(p, pe, q, qe);
    }
    table.value[index] = left.value[index] + right.value[index] - gain;
    table.present[index] = 1;
  });
}

absl::StatusOr<SolveResult> Solver::Run(DpTrace* trace, DpStats* stats) {
  const int count = static_cast<int>(d_.nodes.size());
  tables_.assign(count, Table{});
  // Children always precede their parents.
  for (int t = 0; t < count; ++t) {
    const NiceNode& node = d_.nodes[t];
    if (absl::Status s = Prepare(t); !s.ok()) return s;
    switch (node.kind) {
      case NodeKind::kLeaf:
        tables_[t].value[0] = 0;
        tables_[t].present[0] = 1;
        break;
      case NodeKind::kIntroduce:
        Introduce(t);
        break;
      case NodeKind::kForget:
        Forget(t);
        break;
      case NodeKind::kJoin:
        Join(t);
        break;
    }
    if (trace == nullptr) {
      for (int c : node.children) tables_[c].Release();
    }
  }
  if (stats != nullptr) {
    stats->solves += 1;
    stats->table_entries += entries_;
  }
  if (trace != nullptr) {
    trace->tables.clear();
    for (const Table& table : tables_) {
      DpTable out;
      out.bag = table.bag;
      for (int v : table.bag) {
        out.first.push_back(lo_[v]);
        out.radix.push_back(span_[v]);
      }
      out.values.resize(table.value.size());
      for (size_t x = 0; x < table.value.size(); ++x) {
        if (table.present[x]) out.values[x] = table.value[x];
      }
      trace->tables.push_back(std::move(out));
    }
  }

  SolveResult result;
  const Table& root = tables_[d_.root];
  if (!root.present[0]) return result;

  // Walk down from the root, reading the forgotten values back.
  Embedding f(k_, kUnplaced);
  std::vector<int> stack = {d_.root};
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    const NiceNode& node = d_.nodes[t];
    if (node.kind == NodeKind::kForget) {
      const Table& table = tables_[t];
      uint64_t index = 0;
      for (size_t j = 0; j < table.bag.size(); ++j) {
        index += table.stride[j] * (f[table.bag[j]] - lo_[table.bag[j]]);
      }
      const int v = table.argmax[index];
      if (v < 0) return absl::InternalError("broken argmax chain");
      f[node.vertex] = lo_[node.vertex] + v;
    }
    for (int c : node.children) stack.push_back(c);
  }
  if (std::count(f.begin(), f.end(), kUnplaced) > 0) {
    return absl::InternalError("decomposition does not forget every slot");
  }
  const Weight gain = root.value[0];
  if (!IsBMonotone(b_, part_, f) || GainPartial(inst_, tour_, m_, f) != gain) {
    return absl::InternalError("reconstructed embedding disagrees with table");
  }
  result.gain = gain;
  result.embedding = f;
  result.move = MakeMove(inst_, tour_, m_, f);
  return result;
}

absl::Status CheckIntroduceDegree(const ConnectionPattern& m,
                                  const NiceTreeDecomposition& d) {
  for (const NiceNode& node : d.nodes) {
    if (node.kind != NodeKind::kIntroduce) continue;
    const int i = node.vertex;
    int added = 0;
    for (int p : {2 * i, 2 * i + 1}) {
      const int q = m.partner(p);
      if (q / 2 == i && q < p) continue;
      if (IndexIn(node.bag, q / 2) >= 0) ++added;
    }
    if (added > 2) {
      return absl::InternalError(
          absl::StrCat("introduce node for slot ", i + 1, " adds ", added,
                       " edges"));
    }
  }
  return absl::OkStatus();
}

// Valid patterns per k, computed once.
absl::StatusOr<std::shared_ptr<const std::vector<ConnectionPattern>>>
CachedPatterns(int k) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<ConnectionPattern>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  absl::StatusOr<std::vector<ConnectionPattern>> patterns =
      EnumerateValidPatterns(k);
  if (!patterns.ok()) return patterns.status();
  auto shared = std::make_shared<const std::vector<ConnectionPattern>>(
      std::move(*patterns));
  cache.emplace(k, shared);
  return shared;
}

// Necessary condition for a strictly increasing embedding to exist.
bool Feasible(const BucketAssignment& b, const BucketPartition& part) {
  for (size_t i = 0; i < b.size();) {
    size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    if (static_cast<int>(j - i) > part.size_of(b[i])) return false;
    i = j;
  }
  return true;
}

struct Candidate {
  std::optional<SolveResult> result;
  absl::Status status;
  DpStats stats;
};

bool Better(const SolveResult& a, const std::optional<SolveResult>& best) {
  return a.gain.has_value() &&
         (!best.has_value() || !best->gain.has_value() || *a.gain > *best->gain);
}

}  // namespace

absl::StatusOr<SolveResult> SolveFixed(const Instance& inst, const Tour& tour,
                                       const ConnectionPattern& m,
                                       const BucketAssignment& b,
                                       const BucketPartition& part,
                                       const NiceTreeDecomposition& d,
                                       DpTrace* trace, DpStats* stats) {
  const int k = m.k();
  if (k < kMinMoveOrder || k > kMaxSolverOrder) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be in [", kMinMoveOrder, ", ", kMaxSolverOrder,
                     "]"));
  }
  if (inst.size() != tour.size() || part.n() != tour.size()) {
    return absl::InvalidArgumentError("instance, tour and buckets disagree");
  }
  if (static_cast<int>(b.size()) != k) {
    return absl::InvalidArgumentError("bucket assignment has wrong length");
  }
  for (int i = 0; i < k; ++i) {
    if (b[i] < 0 || b[i] >= part.count() || (i > 0 && b[i] < b[i - 1])) {
      return absl::InvalidArgumentError(
          "bucket assignment must be nondecreasing and in range");
    }
  }
  const Graph g = DependenceGraph(BuildInterferenceGraph(m), OrderEdgeMask(b));
  if (ValidationReport report = ValidateDecomposition(g, d); !report.ok) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid decomposition: ", report.problems.front()));
  }
  if (absl::Status s = CheckIntroduceDegree(m, d); !s.ok()) return s;
  Solver solver(inst, tour, m, b, part, d);
  return solver.Run(trace, stats);
}

Rational DefaultAlpha(int k) {
  switch (k) {
    case 2:
    case 3:
      return Rational(1);
    case 4:
    case 5:
    case 8:
      return Rational(2, 3);
    case 6:
    case 7:
      return Rational(3, 4);
    default:
      return Rational(4, 5);
  }
}

absl::StatusOr<SolveResult> BestMove(const Instance& inst, const Tour& tour,
                                     int k, const SearchOptions& options,
                                     DpStats* stats) {
  const int n = tour.size();
  if (k < kMinMoveOrder || k > kMaxSolverOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "k must be in [", kMinMoveOrder, ", ", kMaxSolverOrder, "]"));
  }
  if (inst.size() != n) {
    return absl::InvalidArgumentError("tour and instance sizes differ");
  }
  if (n < k) {
    return absl::InvalidArgumentError(
        absl::StrCat("instance too small: n = ", n, " < k = ", k));
  }
  absl::StatusOr<BucketPartition> part = BucketPartition::Create(n, options.alpha);
  if (!part.ok()) return part.status();
  auto patterns = CachedPatterns(k);
  if (!patterns.ok()) return patterns.status();
  const std::vector<ConnectionPattern>& all = **patterns;

  std::vector<Candidate> per_pattern(all.size());
  // Smallest pattern index known to hold an improving move (kFirst only).
  std::atomic<size_t> found{all.size()};

  ParallelFor(all.size(), options.threads, [&](size_t index, int) {
    Candidate& out = per_pattern[index];
    if (options.policy == Policy::kFirst && found.load() < index) return;
    const ConnectionPattern& m = all[index];
    const InterferenceGraph im = BuildInterferenceGraph(m);
    std::unordered_map<uint32_t, NiceTreeDecomposition> decompositions;
    uint64_t assignment_index = 0;
    bool stop = false;
    ForEachAssignment(k, part->count(), [&](const BucketAssignment& b) {
      const uint64_t current = assignment_index++;
      if (stop || !Feasible(b, *part)) return;
      if (options.policy == Policy::kFirst && found.load() < index) {
        stop = true;
        return;
      }
      const uint32_t mask = OrderEdgeMask(b);
      auto it = decompositions.find(mask);
      if (it == decompositions.end()) {
        const Graph g = DependenceGraph(im, mask);
        absl::StatusOr<NiceTreeDecomposition> d = OptimalNiceDecomposition(g);
        absl::Status s = d.status();
        if (s.ok()) {
          if (ValidationReport report = ValidateDecomposition(g, *d);
              !report.ok) {
            s = absl::InternalError(report.problems.front());
          } else {
            s = CheckIntroduceDegree(m, *d);
          }
        }
        if (!s.ok()) {
          out.status = s;
          stop = true;
          return;
        }
        it = decompositions.emplace(mask, std::move(*d)).first;
      }
      absl::StatusOr<SolveResult> r =
          Solver(inst, tour, m, b, *part, it->second).Run(nullptr, &out.stats);
      if (!r.ok()) {
        out.status = r.status();
        stop = true;
        return;
      }
      if (!Better(*r, out.result)) return;
      r->pattern_index = static_cast<int>(index);
      r->assignment_index = current;
      r->assignment = b;
      out.result = std::move(*r);
      if (options.policy == Policy::kFirst && *out.result->gain > 0) {
        stop = true;
        size_t seen = found.load();
        while (index < seen && !found.compare_exchange_weak(seen, index)) {
        }
      }
    });
  });

  std::optional<SolveResult> best;
  for (Candidate& c : per_pattern) {
    if (!c.status.ok()) return c.status;
    if (stats != nullptr) {
      stats->solves += c.stats.solves;
      stats->table_entries += c.stats.table_entries;
    }
  }
  for (Candidate& c : per_pattern) {
    if (!c.result.has_value()) continue;
    if (options.policy == Policy::kFirst && *c.result->gain > 0) {
      best = std::move(c.result);
      break;
    }
    if (Better(*c.result, best)) best = std::move(c.result);
  }
  if (!best.has_value()) {
    return absl::InternalError("no embedding found for any pattern");
  }
  const ConnectionPattern& m = all[best->pattern_index];
  if (absl::StatusOr<Tour> check = ApplyMove(inst, tour, m, *best->embedding);
      !check.ok()) {
    return absl::InternalError(
        absl::StrCat("best move failed validation: ", check.status().message()));
  }
  return *best;
}

absl::StatusOr<LocalSearchResult> LocalSearch(const Instance& inst,
                                              const Tour& start, int k,
                                              const SearchOptions& options,
                                              int max_steps) {
  LocalSearchResult result{start, TourWeight(inst, start), {}};
  Weight weight = result.initial_weight;
  auto patterns = CachedPatterns(k);
  if (!patterns.ok()) return patterns.status();
  for (int step = 1; step <= max_steps; ++step) {
    absl::StatusOr<SolveResult> r = BestMove(inst, result.tour, k, options);
    if (!r.ok()) return r.status();
    if (*r->gain <= 0) break;
    absl::StatusOr<Tour> next = ApplyMove(
        inst, result.tour, (**patterns)[r->pattern_index], *r->embedding);
    if (!next.ok()) return next.status();
    const Weight next_weight = TourWeight(inst, *next);
    if (next_weight >= weight) {
      return absl::InternalError("improving move did not reduce tour weight");
    }
    weight = next_weight;
    result.tour = std::move(*next);
    result.history.push_back({step, *r->gain, weight, *r->move});
  }
  return result;
}

}  // namespace kopt
