#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace decklab {

/// Splits [0, total) into fixed-size chunks and evaluates `fn(begin, end)` on
/// each, using up to `workers` threads. Results come back in chunk order, so
/// the merged output does not depend on the worker count. The first exception
/// (by chunk index) is rethrown.
template <typename Fn>
auto parallel_chunks(std::uint64_t total, std::uint64_t chunk, int workers, Fn&& fn)
    -> std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))>
{
    using R = decltype(fn(std::uint64_t{}, std::uint64_t{}));
    chunk = std::max<std::uint64_t>(chunk, 1);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<R> results(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::atomic<std::uint64_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            const std::uint64_t begin = c * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            try {
                results[c] = fn(begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };

    const int threads = static_cast<int>(
        std::min<std::uint64_t>(std::max(workers, 1), std::max<std::uint64_t>(chunks, 1)));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace decklab
