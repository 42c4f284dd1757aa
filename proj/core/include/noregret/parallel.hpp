#pragma once

#include <cstddef>
#include <functional>

namespace noregret {

/// Worker count: NOREGRET_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
/// runs exactly once; callers write results into per-index slots and reduce
/// them in index order, so the outcome does not depend on scheduling. The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t threads = thread_budget());

}  // namespace noregret
