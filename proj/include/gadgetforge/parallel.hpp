#pragma once

#include <cstddef>
#include <functional>

namespace gadgetforge {

// Worker count: hardware concurrency, capped by GADGETFORGE_THREADS when set.
auto thread_count() -> std::size_t;

// Runs body(i) for every i in [0, tasks), handing out indices dynamically to
// up to thread_count() workers. The first exception thrown is rethrown.
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)> &body);

} // namespace gadgetforge
