#pragma once

#include <cstddef>
#include <functional>

namespace pwa {

// Worker cap: PIECEWISE_ATTRACTOR_THREADS when set to a positive integer,
// otherwise hardware concurrency (never less than 1). A value of 0 or an
// unparsable value means "auto".
unsigned worker_count();

// Runs fn(i) for every i in [0, n), partitioned into contiguous blocks over
// worker_count() threads. Every index runs exactly once; callers must write
// results into index-addressed slots so output is independent of scheduling.
// The first exception thrown by fn is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pwa
