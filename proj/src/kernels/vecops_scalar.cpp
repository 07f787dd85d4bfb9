#include "toric/kernels/vecops.hpp"

namespace toric::kernels {
namespace {

bool conformal_divides_scalar(const i64* u, const i64* v, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        const i64 ui = u[i];
        if (ui == 0) continue;
        if (ui > 0 ? v[i] < ui : v[i] > ui) return false;
    }
    return true;
}

bool add_checked_scalar(const i64* a, const i64* b, i64* out, std::size_t n) noexcept {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok &= !__builtin_add_overflow(a[i], b[i], &out[i]);
    return ok;
}

bool sub_checked_scalar(const i64* a, const i64* b, i64* out, std::size_t n) noexcept {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok &= !__builtin_sub_overflow(a[i], b[i], &out[i]);
    return ok;
}

bool opposite_signs_scalar(const i64* a, const i64* b, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return true;
    return false;
}

bool one_norm_scalar(const i64* v, std::size_t n, u64* out) noexcept {
    u64 acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // |INT64_MIN| does not fit in i64; widen through u64 instead.
        const u64 mag = v[i] < 0 ? u64(0) - u64(v[i]) : u64(v[i]);
        if (__builtin_add_overflow(acc, mag, &acc)) return false;
    }
    *out = acc;
    return true;
}

}  // namespace

const VecOps& scalar_ops() noexcept {
    static const VecOps ops{conformal_divides_scalar, add_checked_scalar, sub_checked_scalar,
                            opposite_signs_scalar,    one_norm_scalar,    "scalar"};
    return ops;
}

}  // namespace toric::kernels
