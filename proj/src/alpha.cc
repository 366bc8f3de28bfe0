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

#include "kopt/alpha.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kopt/decomp.h"
#include "kopt/parallel.h"

namespace kopt {
namespace {

uint64_t EdgeKey(const Graph& g) {
  uint64_t key = 0;
  int bit = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v, ++bit)
      if (g.HasEdge(u, v)) key |= uint64_t{1} << bit;
  return key;
}

WidthProfile ProfileOf(const InterferenceGraph& im,
                       std::unordered_map<uint64_t, int>& tw_cache) {
  const int k = im.k;
  WidthProfile profile{k, std::vector<int>(k, 0)};
  for (uint32_t a = 0; a < (1u << (k - 1)); ++a) {
    const Graph g = DependenceGraph(im, a);
    const uint64_t key = EdgeKey(g);
    auto it = tw_cache.find(key);
    if (it == tw_cache.end()) {
      it = tw_cache.emplace(key, TreewidthExact(g)->width).first;
    }
    int& slot = profile.t[std::popcount(a)];
    slot = std::max(slot, it->second + 1);
  }
  return profile;
}

Rational LineAt(int k, int s, int t, const Rational& alpha) {
  return (1 - alpha) * Rational(k - s) + alpha * Rational(t);
}

Rational EnvelopeAt(int k, const std::vector<std::pair<int, int>>& lines,
                    const Rational& alpha) {
  Rational best = LineAt(k, lines[0].first, lines[0].second, alpha);
  for (auto [s, t] : lines) best = std::max(best, LineAt(k, s, t, alpha));
  return best;
}

}  // namespace

absl::StatusOr<WidthProfile> ComputeWidthProfile(const ConnectionPattern& m) {
  if (m.k() < 1 || m.k() > kMaxProfileOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "width profiles support 1 <= k <= ", kMaxProfileOrder));
  }
  std::unordered_map<uint64_t, int> cache;
  return ProfileOf(BuildInterferenceGraph(m), cache);
}

AlphaSolution MinimizeEnvelope(int k,
                               const std::vector<std::pair<int, int>>& lines) {
  // Each line is (k - s) + alpha (t - k + s); the upper envelope is convex,
  // so its minimum sits at 0, 1 or a pairwise crossing. Ties go to the
  // largest alpha: same exponent, fewer bucket assignments.
  std::set<Rational> candidates{Rational(0), Rational(1)};
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const auto [s1, t1] = lines[i];
      const auto [s2, t2] = lines[j];
      const int slope1 = t1 - k + s1;
      const int slope2 = t2 - k + s2;
      if (slope1 == slope2) continue;
      const Rational alpha(s1 - s2, slope1 - slope2);
      if (alpha > 0 && alpha < 1) candidates.insert(alpha);
    }
  }
  AlphaSolution best{Rational(0), EnvelopeAt(k, lines, Rational(0))};
  for (const Rational& alpha : candidates) {
    const Rational value = EnvelopeAt(k, lines, alpha);
    if (value <= best.c) best = {alpha, value};
  }
  return best;
}

AlphaSolution OptimalAlpha(const WidthProfile& profile) {
  std::vector<std::pair<int, int>> lines;
  for (int s = 0; s < profile.k; ++s) lines.emplace_back(s, profile.t[s]);
  return MinimizeEnvelope(profile.k, lines);
}

Rational ExponentAt(const WidthProfile& profile, const Rational& alpha) {
  std::vector<std::pair<int, int>> lines;
  for (int s = 0; s < profile.k; ++s) lines.emplace_back(s, profile.t[s]);
  return EnvelopeAt(profile.k, lines, alpha);
}

absl::StatusOr<CkResult> ComputeCk(int k, const CkOptions& options) {
  if (k < kMinMoveOrder || k > kMaxProfileOrder) {
    return absl::InvalidArgumentError(absl::StrCat(
        "c(k) is supported for ", kMinMoveOrder, " <= k <= ",
        kMaxProfileOrder));
  }
  if (k > kMaxDefaultCkOrder && !options.allow_large_k) {
    uint64_t matchings = 1;
    for (int i = 2 * k - 1; i > 1; i -= 2) matchings *= i;
    return absl::FailedPreconditionError(absl::StrCat(
        "k = ", k, " enumerates ", matchings, " matchings and up to ",
        uint64_t{1} << (k - 1),
        " treewidth computations per interference graph; this takes hours. "
        "Pass --allow-large-k to run it anyway"));
  }

  // Profiles only depend on the simple graph I_M, so patterns are grouped by
  // it.
  std::map<uint64_t, size_t> class_of_key;
  std::vector<InterferenceGraph> classes;
  std::vector<size_t> class_of_pattern;
  std::vector<std::vector<std::pair<int, int>>> pattern_pairs;
  ForEachMatching(k, [&](const ConnectionPattern& m) {
    if (!IsValidPattern(m)) return;
    InterferenceGraph im = BuildInterferenceGraph(m);
    const uint64_t key = EdgeKey(Graph(k, im.edges));
    auto [it, inserted] = class_of_key.emplace(key, classes.size());
    if (inserted) classes.push_back(std::move(im));
    class_of_pattern.push_back(it->second);
    if (options.per_pattern) pattern_pairs.push_back(m.pairs());
  });

  std::vector<WidthProfile> profiles(classes.size());
  std::vector<AlphaSolution> solutions(classes.size());
  const int threads = std::max(1, options.threads);
  std::vector<std::unordered_map<uint64_t, int>> caches(threads);
  ParallelFor(classes.size(), threads, [&](size_t c, int worker) {
    profiles[c] = ProfileOf(classes[c], caches[worker]);
    solutions[c] = OptimalAlpha(profiles[c]);
  });

  CkResult result;
  result.k = k;
  result.valid_patterns = class_of_pattern.size();
  result.interference_classes = classes.size();
  std::set<std::pair<int, int>> lines;
  result.c = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    result.c = std::max(result.c, solutions[c].c);
    for (int s = 0; s < k; ++s) lines.emplace(s, profiles[c].t[s]);
  }
  const AlphaSolution global =
      MinimizeEnvelope(k, {lines.begin(), lines.end()});
  result.alpha = global.alpha;
  result.global_c = global.c;
  if (options.per_pattern) {
    for (size_t p = 0; p < class_of_pattern.size(); ++p) {
      const size_t c = class_of_pattern[p];
      result.per_pattern.push_back(
          PatternExponent{p, pattern_pairs[p], profiles[c], solutions[c]});
    }
  }
  return result;
}

}  // namespace kopt
