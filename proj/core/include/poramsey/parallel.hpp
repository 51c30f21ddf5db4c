#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace poramsey {

/// Worker count from RAMSEY_WORKERS when set to a positive integer,
/// otherwise the machine's hardware concurrency (at least 1).
unsigned default_workers();

/// Runs fn(shard) for every shard index in [0, count) on up to `workers`
/// threads and returns the results indexed by shard, so callers combine them
/// in shard order regardless of scheduling. The first exception thrown by any
/// shard is rethrown after all threads join.
template <typename Result, typename Fn>
std::vector<Result> map_shards(std::size_t count, unsigned workers, Fn && fn)
{
    std::vector<Result> results(count);
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    results[i] = fn(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace poramsey
