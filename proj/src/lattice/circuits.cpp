#include "toric/lattice/circuits.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "toric/lattice/kernel.hpp"
#include "toric/parallel.hpp"

namespace toric::lattice {

namespace {

using detail::BigInt;

constexpr u64 kSubsetLimit = 10'000'000;

u64 binomial_count(std::size_t m, std::size_t k) {
    BigInt c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        c *= BigInt(m - i);
        c /= BigInt(i + 1);
    }
    if (c > kSubsetLimit) return kSubsetLimit + 1;
    return c.convert_to<u64>();
}

// index -> subset in colexicographic order (combinatorial number system).
std::vector<std::size_t> nth_subset(std::size_t m, std::size_t k, u64 index) {
    std::vector<std::size_t> out(k);
    for (std::size_t slot = k; slot > 0; --slot) {
        // largest c with C(c, slot) <= index
        std::size_t c = slot - 1;
        u64 count = 0;  // C(c, slot) at c = slot-1 is 0
        while (c + 1 < m) {
            // C(c+1, slot) = C(c, slot) * (c+1) / (c+1-slot)
            u64 next = (count == 0 && c + 1 == slot) ? 1 : count * (c + 1) / (c + 1 - slot);
            if (next > index) break;
            ++c;
            count = next;
        }
        out[slot - 1] = c;
        index -= count;
    }
    return out;
}

i64 narrow(const BigInt& x) {
    if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
        throw OverflowError("circuit entry exceeds the 64-bit range");
    return x.convert_to<i64>();
}

}  // namespace

std::vector<Vec> circuits(const VectorConfig& A) {
    const std::size_t m = A.cols();
    std::vector<BigInt> entries(A.rows() * m);
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < m; ++c) entries[r * m + c] = A.at(r, c);
    auto full = detail::kernel_basis_bigint(A.rows(), m, entries);
    if (full.basis.empty()) return {};
    const std::size_t k = full.rank + 1;

    const u64 n_subsets = binomial_count(m, k);
    if (n_subsets > kSubsetLimit)
        throw std::invalid_argument("circuit enumeration needs more than " +
                                    std::to_string(kSubsetLimit) + " column subsets");

    auto per_subset = [&](std::size_t index) -> std::vector<Vec> {
        auto cols = nth_subset(m, k, index);
        std::vector<BigInt> sub(A.rows() * k);
        for (std::size_t r = 0; r < A.rows(); ++r)
            for (std::size_t j = 0; j < k; ++j) sub[r * k + j] = A.at(r, cols[j]);
        auto ker = detail::kernel_basis_bigint(A.rows(), k, sub);
        if (ker.basis.size() != 1) return {};
        Vec v(m, 0);
        for (std::size_t j = 0; j < k; ++j) v[cols[j]] = narrow(ker.basis[0][j]);
        return {sign_canonical(std::move(v))};
    };
    auto found = parallel_map_concat<Vec>(std::size_t(n_subsets), per_subset);

    std::sort(found.begin(), found.end(), norm_lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace toric::lattice
