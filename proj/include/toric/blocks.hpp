#pragma once

#include <vector>

#include "toric/graph.hpp"

namespace toric {

enum class BlockKind { CutEdge, Cycle, Other };

// Biconnected components of a connected graph. Blocks are edge sets; no two
// blocks share an edge, and a vertex lying in two or more blocks is a cut
// vertex. Block order is canonical (sorted by edge index list).
struct BlockDecomposition {
    std::vector<std::vector<int>> block_edges;     // sorted edge indices
    std::vector<std::vector<int>> block_vertices;  // sorted vertex ids
    std::vector<BlockKind> kinds;
    std::vector<int> cut_vertices;  // sorted

    int block_count() const { return int(block_edges.size()); }
    bool is_cut_vertex(int v) const;
    // ids of blocks containing v (sorted)
    std::vector<int> blocks_of_vertex(int v) const;
    int block_of_edge(int e) const;

    std::vector<std::vector<int>> vertex_blocks;  // per vertex, sorted block ids
    std::vector<int> edge_block;                  // per edge, owning block
};

// Throws std::invalid_argument("graph not connected") on disconnected input.
// A single vertex with no edges yields an empty decomposition.
BlockDecomposition block_decomposition(const Graph& g);

// Bipartite tree on blocks and cut vertices. Nodes 0..B-1 are blocks,
// B..B+C-1 are cut vertices (in the decomposition's sorted order).
struct BlockTree {
    BlockDecomposition decomposition;
    std::vector<std::pair<int, int>> tree_edges;       // (block id, cut vertex node id)
    std::vector<std::vector<int>> adjacency;           // over all nodes
    int node_count() const { return int(adjacency.size()); }
    int cut_node(int cut_vertex) const;                // node id for a cut vertex

    // Number of blocks strictly between two distinct blocks on the tree path.
    int internal_block_distance(int block_a, int block_b) const;
};

BlockTree block_tree(const Graph& g);

}  // namespace toric
