#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace exind::detail {

// Runs body(i) for every i in [0, count), split into contiguous chunks, one
// per worker. Each index is processed exactly once, so results written to
// per-index slots do not depend on the thread count. threads == 0 means
// hardware concurrency.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace exind::detail
