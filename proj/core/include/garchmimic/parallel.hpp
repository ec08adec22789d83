#pragma once

#include <cstddef>
#include <functional>

namespace garchmimic {

// Global worker count for grid fills (default: all hardware threads).
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for i in [0, n) on up to thread_count() workers.  fn must be
// safe to call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace garchmimic
