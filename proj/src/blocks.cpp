#include "toric/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace toric {

bool BlockDecomposition::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::blocks_of_vertex(int v) const {
    return vertex_blocks[std::size_t(v)];
}

int BlockDecomposition::block_of_edge(int e) const { return edge_block[std::size_t(e)]; }

namespace {

BlockKind classify_block(const Graph& g, const std::vector<int>& edges,
                         const std::vector<int>& verts) {
    if (edges.size() == 1) return BlockKind::CutEdge;
    if (edges.size() != verts.size()) return BlockKind::Other;
    // 2-regular connected <=> a single cycle
    std::vector<int> deg(verts.size(), 0);
    for (const int e : edges) {
        const auto& ed = g.edge(e);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i] == ed.u || verts[i] == ed.v) ++deg[i];
        }
    }
    for (const int d : deg)
        if (d != 2) return BlockKind::Other;
    return BlockKind::Cycle;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph not connected");
    const int n = g.vertex_count();
    BlockDecomposition out;
    out.vertex_blocks.resize(std::size_t(n));
    out.edge_block.assign(std::size_t(g.edge_count()), -1);
    if (g.edge_count() == 0) return out;

    // Iterative Hopcroft–Tarjan with an edge stack.
    std::vector<int> disc(std::size_t(n), -1), low(std::size_t(n), 0), parent_edge(std::size_t(n), -1);
    std::vector<std::size_t> iter(std::size_t(n), 0);
    std::vector<int> estack;
    std::vector<char> is_cut(std::size_t(n), 0);
    std::vector<std::vector<int>> raw_blocks;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[std::size_t(root)] != -1) continue;
        int root_children = 0;
        std::vector<int> vstack{root};
        disc[std::size_t(root)] = low[std::size_t(root)] = timer++;
        while (!vstack.empty()) {
            const int u = vstack.back();
            const auto& nb = g.adjacent(u);
            if (iter[std::size_t(u)] < nb.size()) {
                const auto [w, e] = nb[iter[std::size_t(u)]++];
                if (e == parent_edge[std::size_t(u)]) continue;
                if (disc[std::size_t(w)] == -1) {
                    estack.push_back(e);
                    parent_edge[std::size_t(w)] = e;
                    disc[std::size_t(w)] = low[std::size_t(w)] = timer++;
                    vstack.push_back(w);
                    if (u == root) ++root_children;
                } else if (disc[std::size_t(w)] < disc[std::size_t(u)]) {
                    estack.push_back(e);
                    low[std::size_t(u)] = std::min(low[std::size_t(u)], disc[std::size_t(w)]);
                }
            } else {
                vstack.pop_back();
                if (vstack.empty()) break;
                const int p = vstack.back();
                low[std::size_t(p)] = std::min(low[std::size_t(p)], low[std::size_t(u)]);
                if (low[std::size_t(u)] >= disc[std::size_t(p)]) {
                    // edges up to and including parent_edge[u] form one block
                    std::vector<int> blk;
                    const int stop = parent_edge[std::size_t(u)];
                    while (!estack.empty()) {
                        const int e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == stop) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                    if (p != root || root_children > 1) is_cut[std::size_t(p)] = 1;
                }
            }
        }
    }

    // canonical order
    for (auto& blk : raw_blocks) std::sort(blk.begin(), blk.end());
    std::sort(raw_blocks.begin(), raw_blocks.end());
    out.block_edges = std::move(raw_blocks);

    out.block_vertices.resize(out.block_edges.size());
    out.kinds.resize(out.block_edges.size());
    for (std::size_t b = 0; b < out.block_edges.size(); ++b) {
        std::vector<int> verts;
        for (const int e : out.block_edges[b]) {
            out.edge_block[std::size_t(e)] = int(b);
            verts.push_back(g.edge(e).u);
            verts.push_back(g.edge(e).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (const int v : verts) out.vertex_blocks[std::size_t(v)].push_back(int(b));
        out.kinds[b] = classify_block(g, out.block_edges[b], verts);
        out.block_vertices[b] = std::move(verts);
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[std::size_t(v)]) out.cut_vertices.push_back(v);
    return out;
}

int BlockTree::cut_node(int cut_vertex) const {
    const auto& cv = decomposition.cut_vertices;
    const auto it = std::lower_bound(cv.begin(), cv.end(), cut_vertex);
    if (it == cv.end() || *it != cut_vertex)
        throw std::invalid_argument("vertex is not a cut vertex");
    return decomposition.block_count() + int(it - cv.begin());
}

int BlockTree::internal_block_distance(int block_a, int block_b) const {
    const int nblocks = decomposition.block_count();
    if (block_a < 0 || block_a >= nblocks || block_b < 0 || block_b >= nblocks)
        throw std::invalid_argument("block id out of range");
    if (block_a == block_b) throw std::invalid_argument("blocks must be distinct");
    std::vector<int> prev(std::size_t(node_count()), -2);
    std::queue<int> q;
    q.push(block_a);
    prev[std::size_t(block_a)] = -1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        if (x == block_b) break;
        for (const int y : adjacency[std::size_t(x)]) {
            if (prev[std::size_t(y)] == -2) {
                prev[std::size_t(y)] = x;
                q.push(y);
            }
        }
    }
    if (prev[std::size_t(block_b)] == -2) throw std::invalid_argument("blocks not connected");
    int blocks_on_path = 0;
    for (int x = block_b; x != -1; x = prev[std::size_t(x)])
        if (x < nblocks) ++blocks_on_path;
    return blocks_on_path - 2;
}

BlockTree block_tree(const Graph& g) {
    BlockTree t;
    t.decomposition = block_decomposition(g);
    const int nblocks = t.decomposition.block_count();
    const int ncuts = int(t.decomposition.cut_vertices.size());
    t.adjacency.resize(std::size_t(nblocks + ncuts));
    for (int c = 0; c < ncuts; ++c) {
        const int v = t.decomposition.cut_vertices[std::size_t(c)];
        for (const int b : t.decomposition.blocks_of_vertex(v)) {
            t.tree_edges.push_back({b, nblocks + c});
            t.adjacency[std::size_t(b)].push_back(nblocks + c);
            t.adjacency[std::size_t(nblocks + c)].push_back(b);
        }
    }
    return t;
}

}  // namespace toric
