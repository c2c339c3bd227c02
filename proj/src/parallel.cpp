#include "faskl/parallel.hpp"

#include <atomic>
#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace faskl {

int worker_count() {
  int cap = 0;
  if (const char* env = std::getenv("FAS_KL_THREADS")) {
    try {
      cap = std::stoi(env);
    } catch (...) {
      cap = 0;
    }
  }
  if (cap <= 0) cap = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(cap, 1, 64);
}

void run_chunked(std::uint64_t total,
                 const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  const std::size_t n_chunks = static_cast<std::size_t>((total + kMcChunk - 1) / kMcChunk);
  const int workers = std::min<std::size_t>(worker_count(), n_chunks);

  auto run_range = [&](std::atomic<std::size_t>& next) {
    for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
      const std::uint64_t first = static_cast<std::uint64_t>(c) * kMcChunk;
      const std::uint64_t last = std::min(total, first + kMcChunk);
      fn(c, first, last);
    }
  };

  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::uint64_t first = static_cast<std::uint64_t>(c) * kMcChunk;
      fn(c, first, std::min(total, first + kMcChunk));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, std::ref(next));
  for (auto& t : pool) t.join();
}

}  // namespace faskl
