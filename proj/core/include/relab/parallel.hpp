/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The relab authors
 */

#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace relab {

/// Runs fn(chunk_index, begin, end) over a contiguous partition of [0, n)
/// into at most `workers` chunks. Chunks are fixed by (n, workers) alone, so
/// callers that merge per-chunk results in chunk order get output that does
/// not depend on scheduling. workers <= 1 runs inline.
inline void parallel_chunks(
    std::size_t n, int workers,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t w = workers <= 1 ? 1 : static_cast<std::size_t>(workers);
  if (w > n) w = n;
  if (w == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  std::size_t base = n / w, extra = n % w, begin = 0;
  for (std::size_t c = 0; c < w; ++c) {
    std::size_t len = base + (c < extra ? 1 : 0);
    threads.emplace_back(fn, c, begin, begin + len);
    begin += len;
  }
  for (auto& t : threads) t.join();
}

}  // namespace relab
