#ifndef WAVEBREAK_PARALLEL_HPP
#define WAVEBREAK_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wavebreak {

// Runs fn(i) for i in [0, count) on `threads` workers (0 = hardware
// concurrency). Work is claimed via an atomic counter; fn must write results
// only to slot i so the output is independent of scheduling. The first
// exception thrown by any worker is rethrown on the caller.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    unsigned n_workers = threads > 0 ? static_cast<unsigned>(threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    if (n_workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace wavebreak

#endif
