#pragma once

#include <cstddef>
#include <functional>

namespace succmso {

/// Worker count from SUCCMSO_THREADS, defaulting to 1. Invalid values fall back to 1.
std::size_t default_threads();

/// Runs body(i) for i in [0, count) on up to `threads` workers using
/// contiguous blocks. Results must be written to disjoint slots by the
/// caller; the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

} // namespace succmso
