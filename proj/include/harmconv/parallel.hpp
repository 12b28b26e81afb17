#pragma once

#include <cstddef>
#include <functional>

namespace harmconv {

// Worker count: hardware concurrency, capped by HARMCONV_THREADS when set.
std::size_t thread_count();

// Runs body(begin, end) over [0, count) in contiguous chunks of at most
// `chunk` items spread across thread_count() workers. Chunks are disjoint,
// so bodies writing to their own index range need no synchronization.
void parallel_for(std::size_t count, std::size_t chunk,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace harmconv
