#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace perm321::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs produce(0..tasks-1) on up to `threads` workers and hands each result to
// consume in task order, so output is independent of the worker count.
template <class Result>
void run_ordered(std::size_t tasks, int threads, const std::function<Result(std::size_t)>& produce,
                 const std::function<void(std::size_t, Result&&)>& consume) {
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), tasks);
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) consume(t, produce(t));
        return;
    }

    std::vector<std::promise<Result>> slots(tasks);
    std::vector<std::future<Result>> results;
    results.reserve(tasks);
    for (auto& slot : slots) results.push_back(slot.get_future());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> cancelled{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < tasks; t = next++) {
                if (cancelled) {
                    slots[t].set_exception(std::make_exception_ptr(std::runtime_error("cancelled")));
                    continue;
                }
                try {
                    slots[t].set_value(produce(t));
                } catch (...) {
                    slots[t].set_exception(std::current_exception());
                }
            }
        });
    }

    std::exception_ptr failure;
    for (std::size_t t = 0; t < tasks; ++t) {
        try {
            auto value = results[t].get();
            if (!failure) consume(t, std::move(value));
        } catch (...) {
            if (!failure) failure = std::current_exception();
            cancelled = true;
        }
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace perm321::detail
