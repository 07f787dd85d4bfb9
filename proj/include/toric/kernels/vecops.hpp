#pragma once

#include <cstddef>
#include <string>

#include "toric/common.hpp"

// Componentwise integer-vector primitives underneath the lattice engines.
// Two implementations (portable scalar, AVX2) share this table; the active
// one is chosen once per process from CPU capability plus the TORIC_SIMD
// environment override (auto | scalar | avx2).  Both must agree bit-for-bit;
// the equivalence tests enforce that.

namespace toric::kernels {

struct VecOps {
    // u "fits conformally below" v:  u+ <= v+ and u- <= v- componentwise.
    bool (*conformal_divides)(const i64* u, const i64* v, std::size_t n) noexcept;
    // out = a + b / a - b; returns false if any lane overflows (out then unspecified).
    bool (*add_checked)(const i64* a, const i64* b, i64* out, std::size_t n) noexcept;
    bool (*sub_checked)(const i64* a, const i64* b, i64* out, std::size_t n) noexcept;
    // true iff some position carries strictly opposite signs.
    bool (*opposite_signs)(const i64* a, const i64* b, std::size_t n) noexcept;
    // sum of |v_i|; returns false on overflow of the u64 accumulator.
    bool (*one_norm)(const i64* v, std::size_t n, u64* out) noexcept;
    const char* name;
};

const VecOps& scalar_ops() noexcept;
const VecOps* avx2_ops() noexcept;  // nullptr when the build or CPU lacks AVX2

const VecOps& active_ops() noexcept;
std::string active_backend();

}  // namespace toric::kernels
