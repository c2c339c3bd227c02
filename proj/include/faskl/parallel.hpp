#ifndef FASKL_PARALLEL_HPP
#define FASKL_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace faskl {

// Monte Carlo trials are processed in fixed-size chunks so that per-chunk
// partial results can be reduced in chunk order, independent of how many
// workers ran them.
inline constexpr std::uint64_t kMcChunk = 8192;

/// Worker cap from FAS_KL_THREADS (0 or unset means hardware concurrency).
int worker_count();

/// Invoke fn(chunk_index, first, last) for every chunk of [0, total).
/// Chunks may run on multiple threads; each chunk index is visited exactly
/// once. fn must only write state owned by its chunk index.
void run_chunked(std::uint64_t total,
                 const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

}  // namespace faskl

#endif  // FASKL_PARALLEL_HPP
