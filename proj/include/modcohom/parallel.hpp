#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace modcohom {

// Evaluates f(0), ..., f(count - 1) on up to `jobs` threads. Results come back
// in index order, so the output does not depend on the thread count. The
// first exception thrown by any task is rethrown.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace modcohom
