#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fsig {

// Worker cap: FSIG_THREADS when set, else the machine's concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("FSIG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Deterministic index-sliced map: results land by index regardless of thread
// interleaving.
template <typename T, typename F>
std::vector<T> parallel_map(size_t n, F fn) {
    std::vector<T> out(n);
    const int workers = std::min<long>(thread_count(), static_cast<long>(n ? n : 1));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> threads;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            try {
                for (size_t i = w; i < n; i += workers) out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace fsig
