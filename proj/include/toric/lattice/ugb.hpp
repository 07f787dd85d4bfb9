#pragma once

#include <vector>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

// Whether the primitive kernel vector u belongs to the universal Groebner
// basis: true iff the segment [u+, u-] is an edge of the convex hull of the
// fiber of its A-degree, decided by exact rational feasibility of a weight
// functional that ties the two endpoints and strictly dominates every other
// fiber point. Requires a pointed configuration and a primitive u.
bool in_ugb(const VectorConfig& A, const Vec& u);

// The Graver elements that pass in_ugb, in (1-norm, lex) order.
std::vector<Vec> ugb_elements(const VectorConfig& A);

}  // namespace toric::lattice
