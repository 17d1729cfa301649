#pragma once

#include <thread>
#include <vector>

namespace toric {

/// Splits [0, total) into `workers` contiguous chunks and runs
/// fn(chunk_index, begin, end) for each, in parallel. Chunk boundaries depend
/// only on (total, workers), so per-chunk results can be merged in chunk
/// order for schedule-independent output.
template <typename Fn>
void run_chunked(long long total, int workers, Fn&& fn) {
    if (total <= 0) return;
    if (workers < 1) workers = 1;
    if (static_cast<long long>(workers) > total) workers = static_cast<int>(total);
    if (workers == 1) {
        fn(0, 0LL, total);
        return;
    }
    const long long base = total / workers;
    const long long extra = total % workers;
    std::vector<std::thread> threads;
    long long begin = 0;
    for (int c = 0; c < workers; ++c) {
        const long long len = base + (c < extra ? 1 : 0);
        const long long end = begin + len;
        threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
}

}  // namespace toric
