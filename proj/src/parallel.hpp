// Internal helper: run a loop body over [0, n) on a small worker pool.
// Worker count is hardware_concurrency() capped by the SLOPE_NAV_THREADS
// environment variable (0 or 1 disables threading). The first exception
// thrown by any worker is rethrown on the calling thread after join.

#pragma once

#include <atomic>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

namespace slope_nav::detail {

inline std::size_t worker_count(std::size_t n) {
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("SLOPE_NAV_THREADS")) {
        std::string_view sv(env);
        std::size_t cap = 0;
        auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), cap);
        if (ec == std::errc() && ptr == sv.data() + sv.size()) {
            workers = cap;
        }
    }
    if (workers > n) workers = n;
    return workers;
}

template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    if (n == 0) return;
    const std::size_t workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace slope_nav::detail
