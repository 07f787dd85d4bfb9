#pragma once

#include <vector>

#include "toric/graph.hpp"

namespace toric::acceptance {

// Every connected simple graph with 1..max_edges edges, one representative
// per isomorphism class, ordered by (edge count, canonical form). Isolated
// vertices never appear, so a graph with m edges has at most m+1 vertices.
std::vector<Graph> connected_graphs_up_to(int max_edges);

// `count` connected simple graphs with 9 or 10 edges on 6..8 vertices, drawn
// from a fixed-seed generator so the list never changes between runs.
std::vector<Graph> seeded_random_graphs(int count, unsigned seed);

}  // namespace toric::acceptance
