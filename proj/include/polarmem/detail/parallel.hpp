// Static partitioning of an index range over worker threads.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace polarmem::detail {

/// POLARMEM_THREADS if set to a positive integer, otherwise the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("POLARMEM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(worker, begin, end) on contiguous chunks of [0, total). Exceptions are rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = default_thread_count();
    const auto workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
    if (workers == 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace polarmem::detail
