#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace surfact {

/// 0 means "pick for me"; result clamped to [1, 64].
int resolve_workers(int requested);

/**
 * Split [0, n) into `workers` contiguous chunks and run fn(chunk_index,
 * begin, end) on each, one thread per chunk.  Results keyed by chunk index
 * stay schedule-independent.
 */
template <class Fn>
void parallel_chunks(std::size_t n, int workers, Fn&& fn) {
    if (n == 0) return;
    std::size_t w = static_cast<std::size_t>(workers);
    if (w > n) w = n;
    if (w <= 1) {
        fn(0, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(w);
    std::size_t chunk = (n + w - 1) / w;
    for (std::size_t k = 0; k < w; ++k) {
        std::size_t lo = k * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, k, lo, hi] { fn(k, lo, hi); });
    }
    for (auto& t : threads) t.join();
}

} // namespace surfact
