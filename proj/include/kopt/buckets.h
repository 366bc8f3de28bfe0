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

#ifndef KOPT_BUCKETS_H_
#define KOPT_BUCKETS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "kopt/moves.h"
#include "kopt/rational.h"

namespace kopt {

// Splits tour edge indices 0 .. n-1 into consecutive intervals of size
// s = ceil(n^alpha); only the last bucket may be shorter.
class BucketPartition {
 public:
  static absl::StatusOr<BucketPartition> Create(int n, const Rational& alpha);

  int n() const { return n_; }
  int bucket_size() const { return size_; }
  int count() const { return count_; }

  // First and last edge index of bucket j (0-based, inclusive).
  int first(int bucket) const { return bucket * size_; }
  int last(int bucket) const {
    return bucket + 1 == count_ ? n_ - 1 : (bucket + 1) * size_ - 1;
  }
  int size_of(int bucket) const { return last(bucket) - first(bucket) + 1; }
  int BucketOf(int edge) const { return edge / size_; }

 private:
  BucketPartition(int n, int size)
      : n_(n), size_(size), count_((n + size - 1) / size) {}

  int n_;
  int size_;
  int count_;
};

// Smallest integer m with m >= n^alpha, computed exactly.
int64_t CeilPower(int64_t n, const Rational& alpha);

// Nondecreasing slot -> bucket map.
using BucketAssignment = std::vector<int>;

// Visits all C(count + k - 1, k) assignments in lexicographic order.
void ForEachAssignment(int k, int bucket_count,
                       const std::function<void(const BucketAssignment&)>& fn);

std::vector<BucketAssignment> EnumerateAssignments(int k, int bucket_count);

uint64_t CountAssignments(int k, int bucket_count);

// O_b as a bitmask over P_k: bit i stands for the slot pair {i, i + 1} and is
// set iff b(i) = b(i + 1).
uint32_t OrderEdgeMask(const BucketAssignment& b);

std::vector<std::pair<int, int>> OrderEdges(const BucketAssignment& b);

// (M1) every placed slot lies in its bucket and (M2) consecutive placed slots
// sharing a bucket are strictly increasing.
bool IsBMonotone(const BucketAssignment& b, const BucketPartition& part,
                 const Embedding& f);

}  // namespace kopt

#endif  // KOPT_BUCKETS_H_
