// AVX2 lane of the vector primitives.  Built with -mavx2 in its own TU; only
// reached through the dispatch table after a cpuid check.

#include "toric/kernels/vecops.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace toric::kernels {
namespace {

inline int mask4(__m256i m) noexcept { return _mm256_movemask_pd(_mm256_castsi256_pd(m)); }

bool conformal_divides_avx2(const i64* u, const i64* v, std::size_t n) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i uu = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
        const __m256i vv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const __m256i uzero = _mm256_cmpeq_epi64(uu, zero);
        const __m256i upos = _mm256_cmpgt_epi64(uu, zero);
        const __m256i uneg = _mm256_cmpgt_epi64(zero, uu);
        // u>0 needs v>=u i.e. !(u>v); u<0 needs v<=u i.e. !(v>u)
        const __m256i pos_ok = _mm256_andnot_si256(_mm256_cmpgt_epi64(uu, vv), upos);
        const __m256i neg_ok = _mm256_andnot_si256(_mm256_cmpgt_epi64(vv, uu), uneg);
        const __m256i ok = _mm256_or_si256(uzero, _mm256_or_si256(pos_ok, neg_ok));
        if (mask4(ok) != 0xF) return false;
    }
    for (; i < n; ++i) {
        const i64 ui = u[i];
        if (ui == 0) continue;
        if (ui > 0 ? v[i] < ui : v[i] > ui) return false;
    }
    return true;
}

bool add_checked_avx2(const i64* a, const i64* b, i64* out, std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i aa = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i bb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i rr = _mm256_add_epi64(aa, bb);
        // signed overflow iff operands share a sign the result lacks
        const __m256i ovf = _mm256_and_si256(_mm256_xor_si256(aa, rr), _mm256_xor_si256(bb, rr));
        if (mask4(ovf) != 0) return false;
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), rr);
    }
    for (; i < n; ++i)
        if (__builtin_add_overflow(a[i], b[i], &out[i])) return false;
    return true;
}

bool sub_checked_avx2(const i64* a, const i64* b, i64* out, std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i aa = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i bb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i rr = _mm256_sub_epi64(aa, bb);
        // a - b overflows iff a,b differ in sign and the result has b's sign
        const __m256i ovf = _mm256_and_si256(_mm256_xor_si256(aa, bb), _mm256_xor_si256(aa, rr));
        if (mask4(ovf) != 0) return false;
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), rr);
    }
    for (; i < n; ++i)
        if (__builtin_sub_overflow(a[i], b[i], &out[i])) return false;
    return true;
}

bool opposite_signs_avx2(const i64* a, const i64* b, std::size_t n) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i aa = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i bb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i hit =
            _mm256_or_si256(_mm256_and_si256(_mm256_cmpgt_epi64(aa, zero), _mm256_cmpgt_epi64(zero, bb)),
                            _mm256_and_si256(_mm256_cmpgt_epi64(zero, aa), _mm256_cmpgt_epi64(bb, zero)));
        if (mask4(hit) != 0) return true;
    }
    for (; i < n; ++i)
        if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return true;
    return false;
}

bool one_norm_avx2(const i64* v, std::size_t n, u64* out) noexcept {
    // Fast path only for |v_i| < 2^32, so four u64 lane accumulators cannot wrap.
    const __m256i hi = _mm256_set1_epi64x(i64(1) << 32);
    const __m256i lo = _mm256_set1_epi64x(-(i64(1) << 32));
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const __m256i big =
            _mm256_or_si256(_mm256_cmpgt_epi64(x, hi), _mm256_cmpgt_epi64(lo, x));
        if (mask4(big) != 0) return scalar_ops().one_norm(v, n, out);
        const __m256i neg = _mm256_cmpgt_epi64(zero, x);
        acc = _mm256_add_epi64(acc, _mm256_sub_epi64(_mm256_xor_si256(x, neg), neg));
    }
    alignas(32) u64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    u64 total = 0;
    for (const u64 lane : lanes)
        if (__builtin_add_overflow(total, lane, &total)) return false;
    for (; i < n; ++i) {
        const u64 mag = v[i] < 0 ? u64(0) - u64(v[i]) : u64(v[i]);
        if (__builtin_add_overflow(total, mag, &total)) return false;
    }
    *out = total;
    return true;
}

}  // namespace

const VecOps* avx2_ops() noexcept {
    static const VecOps ops{conformal_divides_avx2, add_checked_avx2, sub_checked_avx2,
                            opposite_signs_avx2,    one_norm_avx2,    "avx2"};
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    return &ops;
}

}  // namespace toric::kernels

#else

namespace toric::kernels {
const VecOps* avx2_ops() noexcept { return nullptr; }
}  // namespace toric::kernels

#endif
