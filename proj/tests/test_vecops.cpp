#include <limits>
#include <random>

#include "doctest.h"
#include "toric/kernels/vecops.hpp"

using namespace toric;
using namespace toric::kernels;

namespace {

// reference semantics, written independently of the scalar kernel
bool ref_conformal(const Vec& u, const Vec& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        const i64 a = u[i], b = v[i];
        const bool ok = a == 0 || (a > 0 && b >= a) || (a < 0 && b <= a);
        if (!ok) return false;
    }
    return true;
}

Vec random_vec(std::mt19937& rng, std::size_t n, i64 lo, i64 hi) {
    std::uniform_int_distribution<i64> d(lo, hi);
    Vec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

void check_pair_agreement(const VecOps& a, const VecOps& b, const Vec& x, const Vec& y) {
    const std::size_t n = x.size();
    CHECK(a.conformal_divides(x.data(), y.data(), n) ==
          b.conformal_divides(x.data(), y.data(), n));
    CHECK(a.opposite_signs(x.data(), y.data(), n) == b.opposite_signs(x.data(), y.data(), n));

    Vec ra(n), rb(n);
    const bool oa = a.add_checked(x.data(), y.data(), ra.data(), n);
    const bool ob = b.add_checked(x.data(), y.data(), rb.data(), n);
    CHECK(oa == ob);
    if (oa) CHECK(ra == rb);

    const bool sa = a.sub_checked(x.data(), y.data(), ra.data(), n);
    const bool sb = b.sub_checked(x.data(), y.data(), rb.data(), n);
    CHECK(sa == sb);
    if (sa) CHECK(ra == rb);

    u64 na = 0, nb = 0;
    const bool fa = a.one_norm(x.data(), n, &na);
    const bool fb = b.one_norm(x.data(), n, &nb);
    CHECK(fa == fb);
    if (fa) CHECK(na == nb);
}

}  // namespace

TEST_CASE("scalar kernels: conformal divisibility semantics") {
    const auto& ops = scalar_ops();
    Vec u{1, 0, -2, 3};
    Vec v{2, 5, -2, 3};
    CHECK(ops.conformal_divides(u.data(), v.data(), 4));
    CHECK_FALSE(ops.conformal_divides(v.data(), u.data(), 4));
    Vec w{1, 0, 2, 3};  // sign flip on the third entry
    CHECK_FALSE(ops.conformal_divides(u.data(), w.data(), 4));
    Vec zero{0, 0, 0, 0};
    CHECK(ops.conformal_divides(zero.data(), u.data(), 4));
    CHECK_FALSE(ops.conformal_divides(u.data(), zero.data(), 4));
}

TEST_CASE("scalar kernels: overflow reporting") {
    const auto& ops = scalar_ops();
    const i64 mx = std::numeric_limits<i64>::max();
    const i64 mn = std::numeric_limits<i64>::min();
    Vec a{mx, 1}, b{1, 1}, out(2);
    CHECK_FALSE(ops.add_checked(a.data(), b.data(), out.data(), 2));
    Vec c{mn, 0};
    CHECK_FALSE(ops.sub_checked(c.data(), b.data(), out.data(), 2));
    u64 norm = 0;
    Vec d{mn, mn};
    CHECK(ops.one_norm(d.data(), 1, &norm));  // |mn| alone fits in u64
    CHECK(norm == u64(1) << 63);
    CHECK_FALSE(ops.one_norm(d.data(), 2, &norm));
}

TEST_CASE("avx2 kernels match scalar kernels") {
    const VecOps* simd = avx2_ops();
    if (simd == nullptr) {
        MESSAGE("AVX2 unavailable on this machine; equivalence suite skipped");
        return;
    }
    const auto& ref = scalar_ops();
    std::mt19937 rng(20240817);

    // every length through several vector blocks, mixing magnitudes
    for (std::size_t n = 0; n <= 67; ++n) {
        check_pair_agreement(ref, *simd, random_vec(rng, n, -9, 9), random_vec(rng, n, -9, 9));
        check_pair_agreement(ref, *simd, random_vec(rng, n, -3, 3),
                             random_vec(rng, n, -(i64(1) << 40), i64(1) << 40));
    }
    // adversarial lanes: extremes in every slot combination
    const i64 mx = std::numeric_limits<i64>::max();
    const i64 mn = std::numeric_limits<i64>::min();
    const Vec specials{0, 1, -1, mx, mn, mx - 1, mn + 1, i64(1) << 32, -(i64(1) << 32)};
    for (const i64 x : specials)
        for (const i64 y : specials) {
            Vec a(8, x), b(8, y);
            a[3] = y;  // break uniformity
            b[5] = x;
            check_pair_agreement(ref, *simd, a, b);
        }
    // randomized conformal pairs where u truly fits below v
    for (int trial = 0; trial < 200; ++trial) {
        Vec v = random_vec(rng, 37, -20, 20);
        Vec u = v;
        std::uniform_int_distribution<int> shrink(0, 2);
        for (auto& x : u) {
            if (x > 0) x -= std::min<i64>(x, shrink(rng));
            else if (x < 0) x += std::min<i64>(-x, shrink(rng));
        }
        CHECK(simd->conformal_divides(u.data(), v.data(), u.size()));
        CHECK(ref_conformal(u, v));
    }
}

TEST_CASE("dispatch reports an available backend") {
    const std::string name = active_backend();
    CHECK((name == "scalar" || name == "avx2"));
}
