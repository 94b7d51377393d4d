#include "lpkinetic/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace lpk {

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LPKINETIC_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap <= 0) return 1;
        n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), n == 0 ? std::size_t(1) : n);
    if (workers <= 1 || n < 2) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    const std::size_t workers = std::min(worker_count(), n == 0 ? std::size_t(1) : n);
    if (workers <= 1 || n < 2) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += term(i);
        return acc;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<double> partial((n + chunk - 1) / chunk, 0.0);
    parallel_for(partial.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t c = lo; c < hi; ++c) {
            double acc = 0.0;
            const std::size_t i0 = c * chunk;
            const std::size_t i1 = std::min(n, i0 + chunk);
            for (std::size_t i = i0; i < i1; ++i) acc += term(i);
            partial[c] = acc;
        }
    });
    double acc = 0.0;
    for (double p : partial) acc += p;
    return acc;
}

}  // namespace lpk
