#pragma once

#include <memory>
#include <vector>

#include "toric/blocks.hpp"
#include "toric/common.hpp"
#include "toric/graph.hpp"

namespace toric {

// The host graph restricted to a set of its edges, with compact vertex ids.
struct EdgeSubgraph {
    Graph graph;
    std::vector<int> to_host_vertex;    // compact id -> host id
    std::vector<int> to_host_edge;      // compact edge -> host edge
    std::vector<int> from_host_vertex;  // host id -> compact id or -1
};

EdgeSubgraph subgraph_on_edges(const Graph& g, std::vector<int> distinct_edges);

// Closed walk of even length over a host graph, stored as the edge sequence
// e_0, e_1, ... together with the vertex itinerary v_0, v_1, ... where e_i
// joins v_i and v_{i+1 mod L}. Positions alternate between the two sides of
// the walk: even positions (0-based) are the plus side.
class EvenClosedWalk {
public:
    static EvenClosedWalk from_edges(const Graph& g, std::vector<int> edge_sequence);

    const Graph& host() const { return *g_; }
    int length() const { return int(edges_.size()); }
    const std::vector<int>& edge_sequence() const { return edges_; }
    const std::vector<int>& itinerary() const { return verts_; }

    // Distinct edges of the walk (sorted).
    const std::vector<int>& support_edges() const { return support_; }
    int multiplicity(int e) const;
    // Positions 0..L-1 at which a host edge is traversed.
    const std::vector<int>& positions_of(int e) const;
    std::vector<int> vertex_set() const;
    // Itinerary positions (0-based, position i = vertex before edge i) at
    // which a host vertex is visited.
    std::vector<int> occurrences_of(int v) const;

    // The walk's graph and its block decomposition (computed once, shared).
    const EdgeSubgraph& subgraph() const;
    const BlockDecomposition& subgraph_blocks() const;

private:
    const Graph* g_ = nullptr;
    std::vector<int> edges_, verts_, support_;
    std::vector<std::vector<int>> positions_;  // parallel to support_
    std::shared_ptr<const EdgeSubgraph> sub_;
    std::shared_ptr<const BlockDecomposition> sub_blocks_;

    EvenClosedWalk() = default;
};

// Closed Euler trail, deterministic: starts at the smallest vertex of
// positive degree and always continues along the unused edge of smallest
// index. Throws "graph not Eulerian" / "walk not even".
EvenClosedWalk euler_trail(const Graph& g);

// Closed trail through the multigraph holding times[e] parallel copies of
// edge e, deterministic with the same traversal rule as euler_trail.
// Requires even copy-degree at every vertex and a connected support.
EvenClosedWalk walk_with_multiplicities(const Graph& g, const std::vector<int>& times);

// Walk traversing each edge e exactly |u_e| times, for a vector u over the
// edges. When u is a primitive kernel vector of the graph's incidence
// configuration, the walk's binomial is x^{u+} - x^{u-} up to overall sign.
EvenClosedWalk walk_of_vector(const Graph& g, const Vec& u);

enum class ChordKind { Bridge, Odd, Even };

struct Chord {
    int edge;
    ChordKind kind;
};

// Edges of g joining two walk vertices without being walk edges, classified
// against the walk: a chord is a bridge when its ends meet two different
// blocks of the walk's graph; otherwise splitting the walk at the chord's
// endpoint occurrences leaves two fragments of equal parity, giving an odd
// or an even chord.
std::vector<Chord> chords_of(const Graph& g, const EvenClosedWalk& w);

}  // namespace toric
