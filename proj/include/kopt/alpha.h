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

#ifndef KOPT_ALPHA_H_
#define KOPT_ALPHA_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "kopt/moves.h"
#include "kopt/rational.h"

namespace kopt {

inline constexpr int kMaxProfileOrder = 10;
// c(k) above this order needs an explicit opt-in; the pattern count grows as
// (2k - 1)!!.
inline constexpr int kMaxDefaultCkOrder = 8;

// t[s] = max over A in P_k with |A| = s of tw(I_M + A) + 1, s = 0 .. k-1,
// where P_k holds the consecutive slot pairs {i, i + 1}.
struct WidthProfile {
  int k = 0;
  std::vector<int> t;
};

absl::StatusOr<WidthProfile> ComputeWidthProfile(const ConnectionPattern& m);

// Minimizer of max_s ((1 - alpha)(k - s) + alpha t[s]) over alpha in [0, 1];
// ties go to the smallest alpha.
struct AlphaSolution {
  Rational alpha;
  Rational c;
};

AlphaSolution OptimalAlpha(const WidthProfile& profile);

// Same minimization over an arbitrary family of (s, t) lines.
AlphaSolution MinimizeEnvelope(int k,
                               const std::vector<std::pair<int, int>>& lines);

// Value of the exponent for one profile at a fixed alpha.
Rational ExponentAt(const WidthProfile& profile, const Rational& alpha);

struct PatternExponent {
  size_t pattern_index = 0;  // position among the valid patterns
  std::vector<std::pair<int, int>> pattern;
  WidthProfile profile;
  AlphaSolution best;
};

struct CkResult {
  int k = 0;
  // max over valid patterns of the per-pattern optimum.
  Rational c;
  // The single alpha minimizing the worst pattern, and that worst value.
  Rational alpha;
  Rational global_c;
  size_t valid_patterns = 0;
  size_t interference_classes = 0;
  std::vector<PatternExponent> per_pattern;  // filled when requested
};

struct CkOptions {
  bool per_pattern = false;
  bool allow_large_k = false;
  int threads = 1;
};

absl::StatusOr<CkResult> ComputeCk(int k, const CkOptions& options = {});

}  // namespace kopt

#endif  // KOPT_ALPHA_H_
