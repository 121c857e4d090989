#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace fns {

// Thread count used by parallel_for.  0 means "one thread".  Results are
// bit-reproducible across thread counts: the index range is split into
// fixed chunks and every output slot is written by exactly one index, so
// no cross-thread reduction order exists.
inline int& worker_threads() {
  static int n = 0;
  return n;
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
  const int req = worker_threads();
  const unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = req > 0 ? static_cast<std::size_t>(req) : 1;
  if (hw > 0 && nthreads > hw) nthreads = hw;
  if (nthreads <= 1 || count < 2 * nthreads) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace fns
