#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cpt {

/// Runs task(i) for i in [0, count) on up to `threads` workers and returns the
/// results in index order. Callers reduce the vector sequentially, so the
/// outcome never depends on the thread count. The first exception is rethrown.
template <class Result, class Task>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Task task)
{
    std::vector<Result> results(count);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = task(i);
        return results;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers)
                        results[i] = task(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

}  // namespace cpt
