#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wythoff {

// Worker count for `jobs` independent tasks, capped by the WYTHOFF_THREADS
// environment variable when set.
[[nodiscard]] inline unsigned thread_budget(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("WYTHOFF_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned long>(v) < n) n = static_cast<unsigned>(v);
    }
    if (jobs < n) n = static_cast<unsigned>(jobs);
    return n == 0 ? 1 : n;
}

// Runs fn(0..count-1), each index exactly once. Results must go into
// per-index slots; with that discipline the outcome is schedule-independent.
// If tasks throw, the lowest-index exception is rethrown after the join.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = thread_budget(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace wythoff
