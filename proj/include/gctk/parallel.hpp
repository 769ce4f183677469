#pragma once

#include <cstddef>
#include <functional>

namespace gctk {

// Worker cap from GCTK_THREADS, else the hardware concurrency.
int worker_count();

// Runs fn(0..count-1) on up to worker_count() threads. The first exception
// thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace gctk
