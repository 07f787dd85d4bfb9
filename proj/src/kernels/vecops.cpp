#include "toric/kernels/vecops.hpp"

#include <cstdlib>
#include <cstring>

namespace toric::kernels {
namespace {

const VecOps* pick() noexcept {
    const char* env = std::getenv("TORIC_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        if (std::strcmp(env, "avx2") == 0) {
            const VecOps* v = avx2_ops();
            if (v != nullptr) return v;
            // requested lane unavailable: fail soft to scalar rather than abort
            return &scalar_ops();
        }
    }
    if (const VecOps* v = avx2_ops()) return v;
    return &scalar_ops();
}

}  // namespace

const VecOps& active_ops() noexcept {
    static const VecOps* chosen = pick();
    return *chosen;
}

std::string active_backend() { return active_ops().name; }

}  // namespace toric::kernels
