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

#ifndef KOPT_PARALLEL_H_
#define KOPT_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kopt {

// Runs fn(i, worker) for i in [0, count) on up to `threads` workers, where
// worker < threads identifies the calling worker. Callers write results into
// per-index slots and reduce afterwards, so the outcome does not depend on
// scheduling.
inline void ParallelFor(size_t count, int threads,
                        const std::function<void(size_t, int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::jthread> workers;
  const int pool = static_cast<int>(std::min<size_t>(threads, count));
  for (int w = 0; w < pool; ++w) {
    workers.emplace_back([&, w] {
      for (size_t i = next++; i < count; i = next++) fn(i, w);
    });
  }
}

}  // namespace kopt

#endif  // KOPT_PARALLEL_H_
