#pragma once

#include <optional>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

struct CycleEnumeration {
    // Each cycle is a vertex sequence in canonical form: it starts at its
    // smallest vertex and its second vertex is the smaller of that vertex's
    // two cycle neighbors. Sorted by (length, sequence).
    std::vector<std::vector<int>> cycles;
    // True when the length cap cut off at least one search branch, i.e. the
    // list is only guaranteed complete up to the cap.
    bool capped = false;
};

// All simple cycles. Without a cap the graph must have at most 24 edges;
// larger inputs require an explicit max_length.
CycleEnumeration enumerate_cycles(const Graph& g, std::optional<int> max_length = {});

// Edge indices along a cycle given as a vertex sequence.
std::vector<int> cycle_edges(const Graph& g, const std::vector<int>& cycle);

}  // namespace toric
