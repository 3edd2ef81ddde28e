#pragma once

#include <cstddef>
#include <functional>

namespace touchloc {

// Global cap on worker threads (CLI --threads). 0 means hardware concurrency.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks over at
// most max_threads() threads. Results must be written to preallocated,
// index-addressed storage so the outcome is independent of the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace touchloc
