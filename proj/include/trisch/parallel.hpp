#pragma once

// Minimal deterministic fork-join helper: map a function over an index range
// on a fixed number of threads and fold the per-thread results in thread
// order. All reductions in this library are exact, so the result is
// identical for every thread count.

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace trisch {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TRISCH_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// f(i) -> R, combined with acc += value; R needs a default constructor.
// Worker exceptions are rethrown on the calling thread after the join.
template <typename R, typename F>
R parallel_sum(std::size_t count, int threads, F&& f) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        R acc{};
        for (std::size_t i = 0; i < count; ++i) acc += f(i);
        return acc;
    }
    std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<R> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                R acc{};
                for (std::size_t i = w; i < count; i += workers) acc += f(i);
                partial[w] = std::move(acc);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    R acc{};
    for (auto& part : partial) acc += part;
    return acc;
}

} // namespace trisch
