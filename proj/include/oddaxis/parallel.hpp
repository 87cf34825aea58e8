#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace oddaxis {

/// Worker cap shared by all sphere scans. 1 = fully sequential.
/// Results are bitwise independent of the setting: workers only fill
/// preassigned slots and every reduction happens afterwards in index order.
inline std::atomic<int>& worker_threads() {
    static std::atomic<int> n{1};
    return n;
}

inline void set_worker_threads(int n) { worker_threads().store(n < 1 ? 1 : n); }

/// Runs body(i) for i in [0, count), split across the configured workers.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const int workers = worker_threads().load();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nthreads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace oddaxis
