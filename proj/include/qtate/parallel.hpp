#pragma once

#include <cstddef>
#include <functional>

namespace qtate {

/// Worker count: QTATE_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency().
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; each index is
/// visited exactly once, so results written per index are deterministic
/// regardless of the thread count. Nested calls run serially on the calling worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qtate
