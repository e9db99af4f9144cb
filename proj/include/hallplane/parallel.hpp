#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hallplane {

/// Block-synchronous parallel driver. Splits [0, n) into consecutive blocks
/// of `block` indices, evaluates up to `jobs` blocks concurrently, and merges
/// block results strictly in index order. When `stop(acc)` turns true after a
/// merge, no further blocks are dispatched and results of later blocks in the
/// running batch are discarded unmerged. Because merging follows index order
/// and block boundaries are fixed, the outcome is byte-identical for any
/// jobs count.
template <class R, class Fn, class Merge, class Stop>
R run_blocks(std::size_t n, std::size_t block, int jobs, R init, Fn fn, Merge merge, Stop stop) {
    if (jobs < 1) jobs = 1;
    if (block < 1) block = 1;
    R acc = std::move(init);
    std::size_t next = 0;
    bool stopped = false;
    if (jobs == 1) {
        while (next < n && !stopped) {
            std::size_t hi = std::min(n, next + block);
            merge(acc, fn(next, hi));
            if (stop(acc)) stopped = true;
            next = hi;
        }
        return acc;
    }
    while (next < n && !stopped) {
        std::size_t remaining_blocks = (n - next + block - 1) / block;
        std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(jobs), remaining_blocks);
        std::vector<R> results(batch);
        std::vector<std::thread> threads;
        threads.reserve(batch);
        for (std::size_t t = 0; t < batch; ++t) {
            std::size_t lo = next + t * block;
            std::size_t hi = std::min(n, lo + block);
            threads.emplace_back([&results, t, lo, hi, &fn] { results[t] = fn(lo, hi); });
        }
        for (auto& th : threads) th.join();
        for (std::size_t t = 0; t < batch && !stopped; ++t) {
            merge(acc, std::move(results[t]));
            if (stop(acc)) stopped = true;
        }
        next += batch * block;
    }
    return acc;
}

} // namespace hallplane
