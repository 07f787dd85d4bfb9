#pragma once

#include <vector>

#include "toric/graph.hpp"
#include "toric/walk.hpp"

namespace toric {

// True when the edge set forms an even cycle, two odd cycles sharing exactly
// one vertex, or two vertex-disjoint odd cycles joined by a path whose
// interior avoids both cycles. Throws std::invalid_argument when the edge
// set is empty or not connected.
bool is_circuit_subgraph(const Graph& g, const std::vector<int>& edges);

// True when the edge set is a single even cycle, or decomposes into cycle
// and cut-edge blocks where every cut vertex lies in exactly two blocks and
// both sides of every cut vertex carry an odd number of cycle-block edges.
// Throws std::invalid_argument when the edge set is empty or not connected.
bool is_primitive_subgraph(const Graph& g, const std::vector<int>& edges);

// True when w faithfully realizes a primitive binomial: cycle-block edges
// traversed once, cut edges twice on the same side, and the support passing
// is_primitive_subgraph. Any closed even walk with these properties carries
// the unique (up to sign) primitive binomial of its support: a second kernel
// vector with the same entry magnitudes would leave a conformal divisor on
// the disagreement support.
bool is_primitive_walk(const EvenClosedWalk& w);

// Sinks of a primitive walk: vertices of a cycle block whose two block edges
// fall on the same side of the walk. One sorted list of host vertex ids per
// block of the walk's graph; cut-edge blocks stay empty.
struct SinkSet {
    std::vector<std::vector<int>> per_block;
    std::vector<int> all() const;  // sorted distinct host vertex ids
};

// Throws std::invalid_argument("requires primitive walk") on other walks and
// std::logic_error should a sink fail to be a cut vertex of the walk's graph.
SinkSet sinks_of(const EvenClosedWalk& w);

// No cycle block has two sinks joined by a block edge.
bool is_strongly_primitive(const EvenClosedWalk& w);

// No cycle block lies entirely on one side of the walk.
bool is_mixed(const EvenClosedWalk& w);

// Minimal-generator test: every chord of w in g is odd, odd chords may cross
// effectively only when the pair closes a square with two walk edges, no
// further odd chord crosses such a pair, and w is strongly primitive.
bool is_minimal_walk(const Graph& g, const EvenClosedWalk& w);

// Member-of-every-minimal-system test: every chord odd, no two odd chords
// cross effectively, and w strongly primitive.
bool is_indispensable_walk(const Graph& g, const EvenClosedWalk& w);

}  // namespace toric
