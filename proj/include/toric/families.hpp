#pragma once

#include <utility>

#include "toric/common.hpp"
#include "toric/graph.hpp"

namespace toric {

// Prism ladder over 2(n+1) rail vertices: rungs v_i..v_{i+1} and u_i..u_{i+1}
// are doubled by three-edge detours through s_i,t_i and x_i,y_i, and the two
// rails are tied together at both ends. 6n+2 vertices, 8n+2 edges, bipartite.
// Vertex order (and so edge indices) is fixed, making regeneration
// byte-identical.
Graph ladder_graph(int n);

// Tree of n-cycles: generation 0 is one n-cycle; every following generation
// glues a fresh n-cycle onto each vertex of degree two, in vertex order.
// All degrees are 2 or 4 (Eulerian), every block is an n-cycle, and the edge
// count is n + n^2((n-1)^r - 1)/(n-2). Requires odd n >= 3.
Graph triangle_tree(int n, int r);

// Replaces every edge by a path of k fresh edges (k >= 2); blocks map onto
// the original blocks with their edge counts scaled by k.
Graph subdivide(const Graph& g, int k);

// Complete graph on n >= 3 vertices, edges in lexicographic order.
Graph complete_graph(int n);

// Degree of the binomial of an Euler trail through the k-subdivided tree of
// n-cycles with r generations: (k/2)(n + n^2((n-1)^r - 1)/(n-2)), always
// integral for odd n. Grows exponentially in r.
i64 expected_euler_degree(int n, int r, int k);

// Largest circuit degree on the same graph: kn + (2r-1)k(n-1), linear in r.
i64 expected_max_circuit_degree(int n, int r, int k);

// Ladder family totals (markov size, common circuit = Graver = universal
// size): (2n+1, 2n+4^n). The gap is exponential while generators stay small.
std::pair<i64, i64> expected_ladder_sizes(int n);

// Ladder family degree maxima (markov, Graver): (n+1, 3n+1).
std::pair<i64, i64> expected_ladder_max_degrees(int n);

// Complete-graph degree maxima (Graver, markov): (n-2, 2) for n >= 4; the
// Graver maximum is attained by a circuit.
std::pair<i64, i64> expected_kn_degrees(int n);

}  // namespace toric
