#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace toric {

// Process-wide worker count for the index-chunked loops below. Results are
// always merged in index order, so the count never changes any output byte.
void set_thread_count(int n);
int thread_count();

namespace detail {
void run_chunked(std::size_t n, int threads, void* ctx, void (*body)(void*, std::size_t));
}

// f(i) -> std::vector<T>; returns the concatenation f(0) + f(1) + ... + f(n-1).
template <class T, class F>
std::vector<T> parallel_map_concat(std::size_t n, F&& f) {
    std::vector<std::vector<T>> parts(n);
    struct Ctx {
        std::vector<std::vector<T>>* parts;
        std::remove_reference_t<F>* f;
    } ctx{&parts, std::addressof(f)};
    detail::run_chunked(n, thread_count(), &ctx, [](void* p, std::size_t i) {
        Ctx& c = *static_cast<Ctx*>(p);
        (*c.parts)[i] = (*c.f)(i);
    });
    std::vector<T> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace toric
