#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ytab::detail {

// Worker cap: STRAIGHT_THREADS if set (>= 1), else hardware concurrency.
int thread_cap();

// Runs fn(i) for i in [0, count) on up to thread_cap() workers. fn must
// write only to disjoint slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace ytab::detail
