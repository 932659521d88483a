#pragma once

#include <cstddef>
#include <functional>

namespace attractor {

// Worker count for internal parallelism; ATTRACTOR_CLASS_THREADS caps it
// (0 or unset means hardware concurrency).
unsigned thread_cap();

// Runs fn(0..n-1) across up to thread_cap() workers. Each index is
// processed exactly once; fn must not touch shared mutable state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace attractor
