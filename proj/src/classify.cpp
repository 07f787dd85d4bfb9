#include "toric/classify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "toric/blocks.hpp"

namespace toric {

namespace {

struct Shape {
    EdgeSubgraph sub;
    BlockDecomposition blocks;
};

Shape shape_of(const Graph& g, const std::vector<int>& edges) {
    if (edges.empty()) throw std::invalid_argument("edge set is empty");
    Shape s{subgraph_on_edges(g, edges), {}};
    if (!s.sub.graph.is_connected())
        throw std::invalid_argument("edge set is not connected");
    s.blocks = block_decomposition(s.sub.graph);
    return s;
}

// Cycle-block edges reachable from block `start` without crossing cut
// vertex `banned`; one of the two sides a cut vertex separates.
long side_cycle_edges(const BlockDecomposition& bd, int start, int banned) {
    std::vector<char> seen(std::size_t(bd.block_count()), 0);
    std::vector<int> stack{start};
    seen[std::size_t(start)] = 1;
    long total = 0;
    while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        if (bd.kinds[std::size_t(b)] == BlockKind::Cycle)
            total += long(bd.block_edges[std::size_t(b)].size());
        for (int v : bd.block_vertices[std::size_t(b)]) {
            if (v == banned || !bd.is_cut_vertex(v)) continue;
            for (int next : bd.blocks_of_vertex(v)) {
                if (!seen[std::size_t(next)]) {
                    seen[std::size_t(next)] = 1;
                    stack.push_back(next);
                }
            }
        }
    }
    return total;
}

bool primitive_shape(const Graph& sub, const BlockDecomposition& bd) {
    const int nb = bd.block_count();
    if (nb == 0) return false;
    if (nb == 1)
        return bd.kinds[0] == BlockKind::Cycle && sub.edge_count() % 2 == 0;
    for (BlockKind k : bd.kinds)
        if (k == BlockKind::Other) return false;
    for (int v : bd.cut_vertices) {
        auto blocks = bd.blocks_of_vertex(v);
        if (blocks.size() != 2) return false;
        if (side_cycle_edges(bd, blocks[0], v) % 2 == 0) return false;
        if (side_cycle_edges(bd, blocks[1], v) % 2 == 0) return false;
    }
    return true;
}

// Side of the walk an edge is traversed on; callers guarantee that both
// traversals of a doubled edge agree. Even positions are the plus side.
bool on_plus_side(const EvenClosedWalk& w, int host_edge) {
    return w.positions_of(host_edge)[0] % 2 == 0;
}

// Sinks of one cycle block, as compact vertex ids of the walk's graph.
std::vector<int> block_sinks(const EvenClosedWalk& w, int b) {
    const EdgeSubgraph& sub = w.subgraph();
    const BlockDecomposition& bd = w.subgraph_blocks();
    std::vector<int> out;
    for (int v : bd.block_vertices[std::size_t(b)]) {
        int found = 0;
        bool first_side = false, sink = false;
        for (int ce : bd.block_edges[std::size_t(b)]) {
            const Graph::Edge& e = sub.graph.edge(ce);
            if (e.u != v && e.v != v) continue;
            bool side = on_plus_side(w, sub.to_host_edge[std::size_t(ce)]);
            if (found++ == 0)
                first_side = side;
            else
                sink = (side == first_side);
        }
        if (sink) out.push_back(v);
    }
    return out;
}

void require_primitive(const EvenClosedWalk& w) {
    if (!is_primitive_walk(w)) throw std::invalid_argument("requires primitive walk");
}

// An odd chord with the single itinerary positions of its two endpoints.
struct OddChordPos {
    int lo, hi;
};

std::vector<OddChordPos> odd_chord_positions(const Graph& g, const EvenClosedWalk& w,
                                             const std::vector<Chord>& chords) {
    std::vector<OddChordPos> out;
    for (const Chord& c : chords) {
        if (c.kind != ChordKind::Odd) continue;
        const Graph::Edge& e = g.edge(c.edge);
        auto pu = w.occurrences_of(e.u);
        auto pv = w.occurrences_of(e.v);
        if (pu.size() != 1 || pv.size() != 1)
            throw std::logic_error("odd chord endpoint visited more than once");
        out.push_back({std::min(pu[0], pv[0]), std::max(pu[0], pv[0])});
    }
    return out;
}

bool chords_cross(const OddChordPos& a, const OddChordPos& b) {
    if (a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi) return false;
    return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
           (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

std::array<int, 4> arcs_between(const OddChordPos& a, const OddChordPos& b, int len) {
    std::array<int, 4> q{a.lo, a.hi, b.lo, b.hi};
    std::sort(q.begin(), q.end());
    return {q[1] - q[0], q[2] - q[1], q[3] - q[2], len - q[3] + q[0]};
}

// Crossing odd chords whose four walk arcs are all odd. This predicate is
// the single place an alternative reading of effective crossing would go.
bool cross_effectively(const OddChordPos& a, const OddChordPos& b, int len) {
    if (!chords_cross(a, b)) return false;
    for (int arc : arcs_between(a, b, len))
        if (arc % 2 == 0) return false;
    return true;
}

// An effective crossing whose two chords close a four-cycle with two walk
// edges: two opposite arcs have length one. The single place defining the
// square exception.
bool forms_square_exception(const OddChordPos& a, const OddChordPos& b, int len) {
    if (!cross_effectively(a, b, len)) return false;
    auto arc = arcs_between(a, b, len);
    return (arc[0] == 1 && arc[2] == 1) || (arc[1] == 1 && arc[3] == 1);
}

}  // namespace

bool is_circuit_subgraph(const Graph& g, const std::vector<int>& edges) {
    Shape s = shape_of(g, edges);
    const BlockDecomposition& bd = s.blocks;
    const int nb = bd.block_count();
    if (nb == 1)
        return bd.kinds[0] == BlockKind::Cycle && s.sub.graph.edge_count() % 2 == 0;

    std::vector<int> cycles;
    for (int b = 0; b < nb; ++b) {
        if (bd.kinds[std::size_t(b)] == BlockKind::Cycle)
            cycles.push_back(b);
        else if (bd.kinds[std::size_t(b)] != BlockKind::CutEdge)
            return false;
    }
    if (cycles.size() != 2) return false;
    for (int b : cycles)
        if (bd.block_edges[std::size_t(b)].size() % 2 == 0) return false;
    for (int v : bd.cut_vertices)
        if (bd.blocks_of_vertex(v).size() != 2) return false;
    // each cycle carries exactly one attachment, so the block tree is a path
    // with the two odd cycles at its ends
    for (int b : cycles) {
        int cuts = 0;
        for (int v : bd.block_vertices[std::size_t(b)]) cuts += bd.is_cut_vertex(v);
        if (cuts != 1) return false;
    }
    return true;
}

bool is_primitive_subgraph(const Graph& g, const std::vector<int>& edges) {
    Shape s = shape_of(g, edges);
    return primitive_shape(s.sub.graph, s.blocks);
}

bool is_primitive_walk(const EvenClosedWalk& w) {
    const EdgeSubgraph& sub = w.subgraph();
    const BlockDecomposition& bd = w.subgraph_blocks();
    for (std::size_t ce = 0; ce < sub.to_host_edge.size(); ++ce) {
        int he = sub.to_host_edge[ce];
        const std::vector<int>& pos = w.positions_of(he);
        switch (bd.kinds[std::size_t(bd.edge_block[ce])]) {
            case BlockKind::Cycle:
                if (pos.size() != 1) return false;
                break;
            case BlockKind::CutEdge:
                if (pos.size() != 2 || (pos[0] + pos[1]) % 2 != 0) return false;
                break;
            case BlockKind::Other:
                return false;
        }
    }
    return primitive_shape(sub.graph, bd);
}

std::vector<int> SinkSet::all() const {
    std::vector<int> out;
    for (const auto& list : per_block) out.insert(out.end(), list.begin(), list.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SinkSet sinks_of(const EvenClosedWalk& w) {
    require_primitive(w);
    const EdgeSubgraph& sub = w.subgraph();
    const BlockDecomposition& bd = w.subgraph_blocks();
    SinkSet out;
    out.per_block.resize(std::size_t(bd.block_count()));
    for (int b = 0; b < bd.block_count(); ++b) {
        if (bd.kinds[std::size_t(b)] != BlockKind::Cycle) continue;
        for (int v : block_sinks(w, b)) {
            if (!bd.is_cut_vertex(v)) throw std::logic_error("sink is not a cut vertex");
            out.per_block[std::size_t(b)].push_back(sub.to_host_vertex[std::size_t(v)]);
        }
        auto& list = out.per_block[std::size_t(b)];
        std::sort(list.begin(), list.end());
    }
    return out;
}

bool is_strongly_primitive(const EvenClosedWalk& w) {
    require_primitive(w);
    const EdgeSubgraph& sub = w.subgraph();
    const BlockDecomposition& bd = w.subgraph_blocks();
    for (int b = 0; b < bd.block_count(); ++b) {
        if (bd.kinds[std::size_t(b)] != BlockKind::Cycle) continue;
        std::vector<int> sinks = block_sinks(w, b);
        if (sinks.size() < 2) continue;
        std::set<int> sink_set(sinks.begin(), sinks.end());
        for (int ce : bd.block_edges[std::size_t(b)]) {
            const Graph::Edge& e = sub.graph.edge(ce);
            if (sink_set.count(e.u) && sink_set.count(e.v)) return false;
        }
    }
    return true;
}

bool is_mixed(const EvenClosedWalk& w) {
    require_primitive(w);
    const EdgeSubgraph& sub = w.subgraph();
    const BlockDecomposition& bd = w.subgraph_blocks();
    for (int b = 0; b < bd.block_count(); ++b) {
        if (bd.kinds[std::size_t(b)] != BlockKind::Cycle) continue;
        bool plus = false, minus = false;
        for (int ce : bd.block_edges[std::size_t(b)])
            (on_plus_side(w, sub.to_host_edge[std::size_t(ce)]) ? plus : minus) = true;
        if (!plus || !minus) return false;
    }
    return true;
}

bool is_minimal_walk(const Graph& g, const EvenClosedWalk& w) {
    require_primitive(w);
    std::vector<Chord> chords = chords_of(g, w);
    for (const Chord& c : chords)
        if (c.kind != ChordKind::Odd) return false;
    std::vector<OddChordPos> oc = odd_chord_positions(g, w, chords);
    const int len = w.length();
    const std::size_t n = oc.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cross_effectively(oc[i], oc[j], len) &&
                !forms_square_exception(oc[i], oc[j], len))
                return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!forms_square_exception(oc[i], oc[j], len)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (chords_cross(oc[k], oc[i]) || chords_cross(oc[k], oc[j]))
                    return false;
            }
        }
    return is_strongly_primitive(w);
}

bool is_indispensable_walk(const Graph& g, const EvenClosedWalk& w) {
    require_primitive(w);
    std::vector<Chord> chords = chords_of(g, w);
    for (const Chord& c : chords)
        if (c.kind != ChordKind::Odd) return false;
    std::vector<OddChordPos> oc = odd_chord_positions(g, w, chords);
    const int len = w.length();
    for (std::size_t i = 0; i < oc.size(); ++i)
        for (std::size_t j = i + 1; j < oc.size(); ++j)
            if (cross_effectively(oc[i], oc[j], len)) return false;
    return is_strongly_primitive(w);
}

}  // namespace toric
