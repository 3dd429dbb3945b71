#pragma once

#include <cstddef>
#include <functional>

namespace plstrat {

/// Worker count used by parallel_for. 0 selects the hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write into preallocated slots so results do not depend on scheduling.
/// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace plstrat
