#pragma once

#include <vector>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

// All support-minimal primitive kernel vectors, sign-canonical, in
// (1-norm, lex) order. For each column subset of size rank+1 whose restricted
// matrix has a one-dimensional kernel, the integral generator of that line is
// a circuit, and every circuit arises this way.
std::vector<Vec> circuits(const VectorConfig& A);

}  // namespace toric::lattice
