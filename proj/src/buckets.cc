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

#include "kopt/buckets.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace kopt {
namespace {

using Wide = unsigned __int128;

// base^exp, saturating at 2^127.
Wide SaturatingPower(uint64_t base, int64_t exp) {
  const Wide cap = Wide{1} << 127;
  Wide result = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result;
}

// m^q >= n^p, i.e. m >= n^(p/q).
bool AtLeastPower(int64_t m, int64_t n, int64_t p, int64_t q) {
  return SaturatingPower(m, q) >= SaturatingPower(n, p);
}

}  // namespace

int64_t CeilPower(int64_t n, const Rational& alpha) {
  const int64_t p = alpha.numerator();
  const int64_t q = alpha.denominator();
  int64_t m = static_cast<int64_t>(
      std::ceil(std::exp(RationalToDouble(alpha) * std::log(double(n)))));
  m = std::max<int64_t>(m, 1);
  while (m > 1 && AtLeastPower(m - 1, n, p, q)) --m;
  while (!AtLeastPower(m, n, p, q)) ++m;
  return m;
}

absl::StatusOr<BucketPartition> BucketPartition::Create(int n,
                                                        const Rational& alpha) {
  if (n < 1) return absl::InvalidArgumentError("n must be positive");
  if (alpha < 0 || alpha > 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "alpha = ", RationalToString(alpha), " outside [0, 1]"));
  }
  return BucketPartition(n, static_cast<int>(CeilPower(n, alpha)));
}

void ForEachAssignment(int k, int bucket_count,
                       const std::function<void(const BucketAssignment&)>& fn) {
  if (k < 1 || bucket_count < 1) return;
  BucketAssignment b(k, 0);
  while (true) {
    fn(b);
    int i = k - 1;
    while (i >= 0 && b[i] == bucket_count - 1) --i;
    if (i < 0) return;
    ++b[i];
    for (int j = i + 1; j < k; ++j) b[j] = b[i];
  }
}

std::vector<BucketAssignment> EnumerateAssignments(int k, int bucket_count) {
  std::vector<BucketAssignment> out;
  ForEachAssignment(k, bucket_count,
                    [&out](const BucketAssignment& b) { out.push_back(b); });
  return out;
}

uint64_t CountAssignments(int k, int bucket_count) {
  // C(bucket_count + k - 1, k), built incrementally so every step is exact.
  uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<uint64_t>(bucket_count + i - 1) / i;
  }
  return c;
}

uint32_t OrderEdgeMask(const BucketAssignment& b) {
  uint32_t mask = 0;
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] == b[i + 1]) mask |= 1u << i;
  }
  return mask;
}

std::vector<std::pair<int, int>> OrderEdges(const BucketAssignment& b) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < static_cast<int>(b.size()); ++i) {
    if (b[i] == b[i + 1]) out.emplace_back(i, i + 1);
  }
  return out;
}

bool IsBMonotone(const BucketAssignment& b, const BucketPartition& part,
                 const Embedding& f) {
  const int k = static_cast<int>(b.size());
  for (int i = 0; i < k; ++i) {
    if (f[i] == kUnplaced) continue;
    if (f[i] < part.first(b[i]) || f[i] > part.last(b[i])) return false;
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (b[i] != b[i + 1] || f[i] == kUnplaced || f[i + 1] == kUnplaced)
      continue;
    if (f[i] >= f[i + 1]) return false;
  }
  return true;
}

}  // namespace kopt
