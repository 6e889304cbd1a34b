#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace roadgeom {

/// Number of worker threads used by the parallel loops; 0 means hardware concurrency.
inline std::size_t& worker_threads() {
    static std::size_t threads = 0;
    return threads;
}

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunk boundaries depend only on n
/// and the thread count; callers write to disjoint slots so results never depend on scheduling.
template <typename Body>
void parallel_chunks(std::size_t n, Body&& body) {
    std::size_t threads = worker_threads();
    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(1, n / 256));
    if (threads <= 1) {
        body(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, t, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) body(i);
    });
}

}  // namespace roadgeom
