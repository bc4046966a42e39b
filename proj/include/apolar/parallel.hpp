#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace apolar {

/// Worker count for parallel sections. `requested` wins if positive;
/// otherwise the APOLAR_THREADS environment variable; otherwise the
/// hardware concurrency. Always at least 1.
inline unsigned thread_budget(int requested = 0) {
    long v = requested;
    if (v <= 0) {
        if (const char* env = std::getenv("APOLAR_THREADS")) {
            char* end = nullptr;
            v = std::strtol(env, &end, 10);
            if (end == env || (end && *end != '\0') || v < 0)
                throw std::invalid_argument("APOLAR_THREADS must be a nonnegative integer");
        }
    }
    if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
    return v > 0 ? static_cast<unsigned>(v) : 1u;
}

/// Runs body(i) for i in [0, count) across up to `threads` workers.
/// Exceptions from workers are rethrown on the calling thread.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(count);
    std::size_t workers = std::min<std::size_t>(threads, count);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace apolar
