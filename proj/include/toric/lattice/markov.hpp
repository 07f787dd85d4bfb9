#pragma once

#include <vector>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

struct MarkovResult {
    // A minimal generating set in (1-norm, lex) order.
    std::vector<Vec> elements;
    // Per element: true when its fiber has exactly two points with no
    // lower-degree connection, so the element appears in every Markov basis.
    std::vector<bool> indispensable;
};

// Builds a Markov basis by walking candidate A-degrees (those of Graver
// elements) in increasing weighted order: within each fiber, points already
// connected by accepted lower-degree generators are merged, and one connector
// per remaining split is added (lexicographically smallest representatives).
// Size and degree multiset are invariants of the configuration.
MarkovResult markov_by_fibers(const VectorConfig& A);

}  // namespace toric::lattice
