#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wdparam {

/// Worker cap: WDPARAM_THREADS, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("WDPARAM_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Index-parallel loop with deterministic work assignment; results must be
/// written to per-index slots by the body.
template <typename Body>
void parallel_for(size_t count, const Body& body) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<size_t>(workers, count));
    for (unsigned t = 0; t < spawn; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace wdparam
