#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace qc {

inline int thread_count() {
    if (const char* env = std::getenv("QC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 4 ? 4 : hw);
}

/// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous chunks.
/// Results must be merged and canonically ordered by the caller, so the
/// outcome is independent of the thread count.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    int threads = thread_count();
    if (threads <= 1 || n < 64) {
        fn(0, std::size_t(0), n);
        return;
    }
    std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::size_t begin = t * chunk;
        if (begin >= n) break;
        std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace qc
