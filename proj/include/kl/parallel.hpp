#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "kl/config.hpp"

namespace kl {

// Deterministic fork/join helper. Work is cut into chunks whose boundaries
// depend only on the problem size, never on the thread count; workers fill
// per-chunk buffers and the caller combines them in chunk-index order. Two
// runs therefore produce bit-identical floating-point results whether they
// use 1 thread or 64.
class Parallel {
public:
    explicit Parallel(int threads = 0) : threads_(resolve_threads(threads)) {}

    int threads() const { return threads_; }

    // body(chunk_index) for chunk_index in [0, n_chunks), any execution order.
    // The caller must not make the bodies order-dependent.
    template <class F>
    void for_chunks(std::size_t n_chunks, F&& body) const {
        if (n_chunks == 0) return;
        int t = threads_;
        if (t <= 1 || n_chunks == 1) {
            for (std::size_t i = 0; i < n_chunks; ++i) body(i);
            return;
        }
        if (static_cast<std::size_t>(t) > n_chunks) t = static_cast<int>(n_chunks);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr first_error;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(t));
        std::atomic<int> error_flag{0};
        for (int w = 0; w < t; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= n_chunks || failed.load()) return;
                    try {
                        body(i);
                    } catch (...) {
                        if (error_flag.exchange(1) == 0) first_error = std::current_exception();
                        failed.store(true);
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

private:
    int threads_;
};

}  // namespace kl
