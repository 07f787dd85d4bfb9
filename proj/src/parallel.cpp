#include "toric/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace toric {
namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) { g_threads.store(n < 1 ? 1 : n); }
int thread_count() { return g_threads.load(); }

namespace detail {

void run_chunked(std::size_t n, int threads, void* ctx, void (*body)(void*, std::size_t)) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(threads < 1 ? 1 : threads, n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(ctx, i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                body(ctx, i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(err);
}

}  // namespace detail
}  // namespace toric
