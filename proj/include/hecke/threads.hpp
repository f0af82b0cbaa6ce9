#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hecke {

inline int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : (int)n;
}

// Run fn(i0, i1) over a fixed contiguous partition of [0, n).  The partition
// depends only on n and thread count; callers that merge per-index results
// in index order get thread-count independent output.
inline void parallel_chunks(std::int64_t n, int threads,
                            const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (threads < 1) threads = 1;
    if (n <= 0) return;
    if (threads == 1 || n < 2) {
        fn(0, n);
        return;
    }
    std::int64_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        std::int64_t i0 = t * chunk, i1 = std::min<std::int64_t>(n, (t + 1) * chunk);
        if (i0 >= i1) break;
        pool.emplace_back(fn, i0, i1);
    }
    fn(0, std::min<std::int64_t>(n, chunk));
    for (auto& th : pool) th.join();
}

// Neumaier compensated accumulator
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace hecke
