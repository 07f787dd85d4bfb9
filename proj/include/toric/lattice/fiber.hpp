#pragma once

#include <vector>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

// All nonnegative integer points x with A.x = b, listed in ascending
// lexicographic order.
struct Fiber {
    Vec degree;
    std::vector<Vec> points;
};

// Exhaustive enumeration by bounded backtracking. Requires a pointed
// configuration (otherwise fibers can be infinite); a precomputed
// strictly positive functional can be passed to skip the feasibility solve.
Fiber fiber(const VectorConfig& A, Vec b);
Fiber fiber(const VectorConfig& A, Vec b, const Vec& certificate);

}  // namespace toric::lattice
