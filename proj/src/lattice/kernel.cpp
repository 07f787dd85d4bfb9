#include "toric/lattice/kernel.hpp"

#include <limits>
#include <utility>

namespace toric::lattice {

namespace detail {

BigKernel kernel_basis_bigint(std::size_t rows, std::size_t cols,
                              const std::vector<BigInt>& row_major) {
    // Work matrix M (mutated by column operations) and transform U with
    // M_final = M_input . U kept in sync; U stays unimodular.
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = row_major[r * cols + c];
    std::vector<std::vector<BigInt>> u(cols, std::vector<BigInt>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) u[c][c] = 1;

    auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        // column dst -= q * column src
        for (std::size_t r = 0; r < rows; ++r) m[r][dst] -= q * m[r][src];
        for (std::size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][a], u[r][b]);
    };

    std::size_t pivot = 0;
    for (std::size_t row = 0; row < rows && pivot < cols; ++row) {
        // Euclidean elimination across columns >= pivot in this row until at
        // most one nonzero entry remains.
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = pivot; c < cols; ++c) {
                if (m[row][c] == 0) continue;
                if (best == cols || abs(m[row][c]) < abs(m[row][best])) best = c;
            }
            if (best == cols) break;  // row is zero past the pivot columns
            bool lone = true;
            for (std::size_t c = pivot; c < cols; ++c) {
                if (c == best || m[row][c] == 0) continue;
                BigInt q = m[row][c] / m[row][best];
                col_axpy(c, best, q);
                if (m[row][c] != 0) lone = false;
            }
            if (lone) {
                col_swap(pivot, best);
                ++pivot;
                break;
            }
        }
    }

    BigKernel out;
    out.rank = pivot;
    for (std::size_t c = pivot; c < cols; ++c) {
        std::vector<BigInt> v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

namespace {

i64 narrow(const detail::BigInt& x) {
    if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
        throw OverflowError("kernel basis entry exceeds the 64-bit range");
    return x.convert_to<i64>();
}

}  // namespace

std::vector<Vec> kernel_lattice(const VectorConfig& A) {
    std::vector<detail::BigInt> entries(A.rows() * A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) entries[r * A.cols() + c] = A.at(r, c);
    auto big = detail::kernel_basis_bigint(A.rows(), A.cols(), entries);
    std::vector<Vec> basis;
    basis.reserve(big.basis.size());
    for (const auto& bv : big.basis) {
        Vec v(bv.size());
        for (std::size_t i = 0; i < bv.size(); ++i) v[i] = narrow(bv[i]);
        basis.push_back(sign_canonical(std::move(v)));
    }
    return basis;
}

std::size_t rank_of(const VectorConfig& A) {
    std::vector<detail::BigInt> entries(A.rows() * A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) entries[r * A.cols() + c] = A.at(r, c);
    return detail::kernel_basis_bigint(A.rows(), A.cols(), entries).rank;
}

}  // namespace toric::lattice
