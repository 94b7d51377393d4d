#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace lpk {

// Worker count: min(hardware, LPKINETIC_THREADS) with LPKINETIC_THREADS=0
// meaning "serial".
std::size_t worker_count();

// Static block partition of [0,n). Each worker owns a contiguous index range,
// so per-index writes need no synchronization and reductions done by chunk
// index are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

// Deterministic parallel sum: per-chunk partials accumulated in chunk order.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term);

}  // namespace lpk
