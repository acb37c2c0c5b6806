#ifndef NPINV_PARALLEL_HPP
#define NPINV_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace npinv {

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Static block partition of [0, n).  Results must be written into
// per-index slots by the body so the outcome does not depend on the
// thread count.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 2) {
        body(0, n);
        return;
    }
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// Pairwise tree reduction: the summation order is a fixed function of the
// slot count, independent of the thread count.
template <typename T>
T tree_reduce(std::vector<T> slots) {
    if (slots.empty()) return T{};
    std::size_t n = slots.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) slots[i] = slots[i] + slots[i + half];
        n = half;
    }
    return slots[0];
}

} // namespace npinv

#endif
