#pragma once

#include <cstddef>
#include <functional>

namespace wglab {

// Worker count: WGLAB_WORKERS when set to a positive integer, otherwise the
// hardware concurrency (at least 1). Throws ConfigError on a malformed value.
std::size_t default_worker_count();

// Runs body(chunk) for every chunk in [0, chunks) on up to `workers` threads.
// Chunks are claimed dynamically; callers write results into per-chunk slots
// so the outcome does not depend on scheduling. The first exception thrown by
// a body is rethrown after all threads join.
void parallel_for_chunks(std::size_t chunks, std::size_t workers,
                         const std::function<void(std::size_t)>& body);

}  // namespace wglab
