#ifndef LEXIND_PARALLEL_H_
#define LEXIND_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lexind {

// 0 means "use the machine's parallelism".
inline unsigned ResolveThreads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(begin, end, worker) over contiguous chunks of [0, n). Chunk
// boundaries depend only on n and the worker count, and every index is
// handled exactly once, so callers writing results by index stay
// deterministic. The first exception thrown by a worker is rethrown.
template <class Body>
void ParallelFor(std::size_t n, unsigned threads, Body&& body) {
  unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(ResolveThreads(threads), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    body(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace lexind

#endif  // LEXIND_PARALLEL_H_
