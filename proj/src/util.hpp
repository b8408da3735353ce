#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace freesep {

// requested <= 0 means "use FREESEP_THREADS from the environment, default 1"
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FREESEP_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// Runs fn(chunk) for every chunk index on up to `threads` workers. Each chunk
// writes only its own output slot, so results do not depend on thread count.
template <class Fn>
void parallel_chunks(std::size_t nchunks, int threads, Fn fn) {
  if (threads <= 1 || nchunks <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) fn(c);
  };
  std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), nchunks);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::size_t i = 0; i < nworkers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace freesep
