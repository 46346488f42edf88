#pragma once

#include <cstdint>
#include <functional>

namespace contractlab {

/// Worker count: hardware concurrency capped by the CONTRACTLAB_THREADS
/// environment variable (and by `limit` when positive).
int worker_count(int limit = 0);

/// Splits [0, total) into contiguous chunks, one per worker, and runs
/// fn(chunk_index, begin, end) on each from its own thread. fn must only
/// write to per-chunk state; callers merge results afterwards in chunk
/// order so the outcome is independent of scheduling.
void parallel_chunks(std::uint64_t total,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn,
                     int max_workers = 0);

}  // namespace contractlab
