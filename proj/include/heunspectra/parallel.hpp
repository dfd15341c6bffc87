#pragma once

#include <cstddef>
#include <functional>

namespace heunspectra {

// Worker count: hardware concurrency, capped by HEUNSPECTRA_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is
// visited exactly once; callers write results into pre-sized slots so the
// output order never depends on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace heunspectra
