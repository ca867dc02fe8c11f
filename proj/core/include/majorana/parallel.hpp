#pragma once

#include <cstddef>
#include <functional>

namespace majorana {

/// Worker count: MAJORANA_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for every i in [0, n), split into contiguous chunks over
/// thread_count() threads. Each index is handled by exactly one call, so
/// results that depend only on i are identical to the serial loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace majorana
