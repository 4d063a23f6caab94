#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace trievac {

/// Worker count: TRIEVAC_JOBS env var if set, else hardware concurrency.
inline int default_jobs() {
  if (const char* env = std::getenv("TRIEVAC_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

/// Runs body(chunk_index, lo, hi) over the index range [0, n) split into
/// contiguous chunks, one per worker. Chunking is deterministic, so callers
/// can keep reductions deterministic by merging per-chunk results in order.
template <class F>
void parallel_chunks(long n, int jobs, F&& body) {
  if (n <= 0) return;
  jobs = std::max(1, std::min(jobs, static_cast<int>(std::min<long>(n, 64))));
  if (jobs == 1) {
    body(0, 0L, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  const long base = n / jobs;
  const long rem = n % jobs;
  long lo = 0;
  for (int k = 0; k < jobs; ++k) {
    const long hi = lo + base + (k < rem ? 1 : 0);
    pool.emplace_back([&body, k, lo, hi] { body(k, lo, hi); });
    lo = hi;
  }
  for (auto& th : pool) th.join();
}

}  // namespace trievac
