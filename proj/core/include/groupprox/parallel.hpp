#pragma once

#include <cstddef>
#include <functional>

namespace groupprox {

/// Worker count: hardware concurrency, capped by GROUPPROX_THREADS when set.
std::size_t worker_limit();

/// Calls body(i) for i in [0, count) on up to `workers` threads. Each index is
/// visited exactly once; callers write results to slot i, so assembly does
/// not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace groupprox
