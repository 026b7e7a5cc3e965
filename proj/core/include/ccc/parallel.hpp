#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ccc {

/// 0 means "use hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs body(task) for every task in [0, tasks) on up to `threads` workers.
/// Tasks are claimed dynamically; callers must make each task write only to
/// its own output slot so results do not depend on scheduling. The first
/// exception thrown by any task is rethrown on the calling thread.
template <typename Body>
void parallel_tasks(std::size_t tasks, unsigned threads, Body&& body) {
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), tasks));
    if (threads <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) body(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks) return;
            try {
                body(t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace ccc
