#pragma once

#include <optional>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/common.hpp"
#include "toric/graph.hpp"

namespace toric {

// A basis computed from walk enumeration. `truncated` reports that a degree
// cap cut off part of the search, so the list is only guaranteed complete up
// to the cap; it is never set by the pruning of invalid shapes.
struct WalkBasis {
    std::vector<Binomial> elements;
    bool truncated = false;
};

// All circuits: even cycles, two odd cycles sharing one vertex, and pairs of
// vertex-disjoint odd cycles joined by a path. Complete on every input.
WalkBasis enumerate_circuit_walks(const Graph& g);

// All primitive binomials up to the optional degree cap, found by growing
// trees of cycles joined at shared vertices or by paths of doubled edges and
// keeping the shapes with odd cycle-edge counts on both sides of every cut
// vertex. A cap is required above 14 edges.
WalkBasis enumerate_graver_walks(const Graph& g, std::optional<u64> degree_cap = {});

// A minimal generating set: minimal-walk candidates, thinned degree class by
// degree class to one spanning set of connectors across the components each
// fiber splits into under the moves already accepted.
WalkBasis enumerate_markov_walks(const Graph& g);

// Primitive binomials whose walks are mixed.
WalkBasis enumerate_ugb_walks(const Graph& g, std::optional<u64> degree_cap = {});

}  // namespace toric
