#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

// Basis of the integer kernel {x : A.x = 0}, one vector per basis element.
// The lattice spanned is the full (saturated) kernel, so every basis vector
// is primitive as an integer vector. Size = cols - rank(A).
std::vector<Vec> kernel_lattice(const VectorConfig& A);

std::size_t rank_of(const VectorConfig& A);

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

struct BigKernel {
    std::vector<std::vector<BigInt>> basis;
    std::size_t rank;
};

// Column-style unimodular reduction over arbitrary-precision integers;
// intermediates can outgrow 64 bits even when the input and output fit.
BigKernel kernel_basis_bigint(std::size_t rows, std::size_t cols,
                              const std::vector<BigInt>& row_major);

}  // namespace detail

}  // namespace toric::lattice
