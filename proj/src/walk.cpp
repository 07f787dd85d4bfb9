#include "toric/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

EdgeSubgraph subgraph_on_edges(const Graph& g, std::vector<int> distinct_edges) {
    std::sort(distinct_edges.begin(), distinct_edges.end());
    distinct_edges.erase(std::unique(distinct_edges.begin(), distinct_edges.end()),
                         distinct_edges.end());
    std::vector<int> from_host(std::size_t(g.vertex_count()), -1);
    std::vector<int> to_host_vertex;
    auto compact = [&](int v) {
        if (from_host[std::size_t(v)] == -1) {
            from_host[std::size_t(v)] = int(to_host_vertex.size());
            to_host_vertex.push_back(v);
        }
        return from_host[std::size_t(v)];
    };
    std::vector<std::pair<int, int>> edges;
    for (const int e : distinct_edges) {
        const auto& ed = g.edge(e);
        edges.push_back({compact(ed.u), compact(ed.v)});
    }
    return EdgeSubgraph{Graph(int(to_host_vertex.size()), edges), std::move(to_host_vertex),
                        std::move(distinct_edges), std::move(from_host)};
}

EvenClosedWalk EvenClosedWalk::from_edges(const Graph& g, std::vector<int> edge_sequence) {
    if (edge_sequence.empty()) throw std::invalid_argument("walk is empty");
    if (edge_sequence.size() % 2 != 0) throw std::invalid_argument("walk not even");
    for (const int e : edge_sequence)
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");

    auto chain = [&](int start) -> std::vector<int> {
        std::vector<int> itinerary;
        itinerary.reserve(edge_sequence.size());
        int at = start;
        for (const int e : edge_sequence) {
            const auto& ed = g.edge(e);
            if (ed.u != at && ed.v != at) return {};
            itinerary.push_back(at);
            at = (ed.u == at) ? ed.v : ed.u;
        }
        if (at != start) return {};
        return itinerary;
    };

    const auto& first = g.edge(edge_sequence.front());
    std::vector<int> verts = chain(std::min(first.u, first.v));
    if (verts.empty()) verts = chain(std::max(first.u, first.v));
    if (verts.empty()) throw std::invalid_argument("edge sequence is not a closed walk");

    EvenClosedWalk w;
    w.g_ = &g;
    w.verts_ = std::move(verts);
    w.support_ = edge_sequence;
    std::sort(w.support_.begin(), w.support_.end());
    w.support_.erase(std::unique(w.support_.begin(), w.support_.end()), w.support_.end());
    w.positions_.resize(w.support_.size());
    for (std::size_t pos = 0; pos < edge_sequence.size(); ++pos) {
        const auto it =
            std::lower_bound(w.support_.begin(), w.support_.end(), edge_sequence[pos]);
        w.positions_[std::size_t(it - w.support_.begin())].push_back(int(pos));
    }
    w.edges_ = std::move(edge_sequence);
    return w;
}

int EvenClosedWalk::multiplicity(int e) const {
    const auto it = std::lower_bound(support_.begin(), support_.end(), e);
    if (it == support_.end() || *it != e) return 0;
    return int(positions_[std::size_t(it - support_.begin())].size());
}

const std::vector<int>& EvenClosedWalk::positions_of(int e) const {
    static const std::vector<int> none;
    const auto it = std::lower_bound(support_.begin(), support_.end(), e);
    if (it == support_.end() || *it != e) return none;
    return positions_[std::size_t(it - support_.begin())];
}

std::vector<int> EvenClosedWalk::vertex_set() const {
    std::vector<int> vs = verts_;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<int> EvenClosedWalk::occurrences_of(int v) const {
    std::vector<int> occ;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == v) occ.push_back(int(i));
    return occ;
}

const EdgeSubgraph& EvenClosedWalk::subgraph() const {
    if (!sub_) {
        auto* self = const_cast<EvenClosedWalk*>(this);
        self->sub_ = std::make_shared<EdgeSubgraph>(subgraph_on_edges(*g_, support_));
    }
    return *sub_;
}

const BlockDecomposition& EvenClosedWalk::subgraph_blocks() const {
    if (!sub_blocks_) {
        auto* self = const_cast<EvenClosedWalk*>(this);
        self->sub_blocks_ =
            std::make_shared<BlockDecomposition>(block_decomposition(subgraph().graph));
    }
    return *sub_blocks_;
}

EvenClosedWalk euler_trail(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("graph not Eulerian");
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) throw std::invalid_argument("graph not Eulerian");
        if (start == -1 && g.degree(v) > 0) start = v;
    }
    // connectivity over vertices of positive degree
    {
        std::vector<char> seen(std::size_t(g.vertex_count()), 0);
        std::vector<int> stack{start};
        seen[std::size_t(start)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.adjacent(v)) {
                (void)e;
                if (!seen[std::size_t(w)]) {
                    seen[std::size_t(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0 && !seen[std::size_t(v)])
                throw std::invalid_argument("graph not Eulerian");
    }
    if (g.edge_count() % 2 != 0) throw std::invalid_argument("walk not even");

    // Hierholzer; at every vertex the incident edges are tried in increasing
    // edge-index order, which pins the output.
    std::vector<std::vector<std::pair<int, int>>> inc(std::size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        inc[std::size_t(v)] = g.adjacent(v);
        std::sort(inc[std::size_t(v)].begin(), inc[std::size_t(v)].end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
    }
    std::vector<std::size_t> ptr(std::size_t(g.vertex_count()), 0);
    std::vector<char> used(std::size_t(g.edge_count()), 0);
    std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, edge taken to reach it)
    std::vector<int> trail_edges;
    while (!stack.empty()) {
        const int v = stack.back().first;
        auto& p = ptr[std::size_t(v)];
        while (p < inc[std::size_t(v)].size() && used[std::size_t(inc[std::size_t(v)][p].second)])
            ++p;
        if (p == inc[std::size_t(v)].size()) {
            if (stack.back().second != -1) trail_edges.push_back(stack.back().second);
            stack.pop_back();
        } else {
            const auto [w, e] = inc[std::size_t(v)][p];
            used[std::size_t(e)] = 1;
            stack.push_back({w, e});
        }
    }
    std::reverse(trail_edges.begin(), trail_edges.end());
    return EvenClosedWalk::from_edges(g, std::move(trail_edges));
}

EvenClosedWalk walk_with_multiplicities(const Graph& g, const std::vector<int>& times) {
    if (times.size() != std::size_t(g.edge_count()))
        throw std::invalid_argument("multiplicity count does not match edge count");
    std::vector<long> copy_degree(std::size_t(g.vertex_count()), 0);
    long total = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const int t = times[std::size_t(e)];
        if (t < 0) throw std::invalid_argument("negative multiplicity");
        copy_degree[std::size_t(g.edge(e).u)] += t;
        copy_degree[std::size_t(g.edge(e).v)] += t;
        total += t;
    }
    if (total == 0) throw std::invalid_argument("walk is empty");
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (copy_degree[std::size_t(v)] % 2 != 0)
            throw std::invalid_argument("odd degree in the walk multigraph");
        if (start == -1 && copy_degree[std::size_t(v)] > 0) start = v;
    }
    {
        std::vector<char> seen(std::size_t(g.vertex_count()), 0);
        std::vector<int> stack{start};
        seen[std::size_t(start)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.adjacent(v)) {
                if (times[std::size_t(e)] > 0 && !seen[std::size_t(w)]) {
                    seen[std::size_t(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (copy_degree[std::size_t(v)] > 0 && !seen[std::size_t(v)])
                throw std::invalid_argument("support is not connected");
    }

    // Hierholzer over the edge copies; increasing edge index (copies of one
    // edge back to back) pins the trail.
    std::vector<int> copy_edge;
    std::vector<std::vector<std::pair<int, int>>> inc(std::size_t(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int t = 0; t < times[std::size_t(e)]; ++t) {
            const int id = int(copy_edge.size());
            copy_edge.push_back(e);
            inc[std::size_t(g.edge(e).u)].emplace_back(id, g.edge(e).v);
            inc[std::size_t(g.edge(e).v)].emplace_back(id, g.edge(e).u);
        }
    }
    std::vector<std::size_t> ptr(std::size_t(g.vertex_count()), 0);
    std::vector<char> used(copy_edge.size(), 0);
    std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, copy taken to reach it)
    std::vector<int> trail_edges;
    while (!stack.empty()) {
        const int v = stack.back().first;
        auto& p = ptr[std::size_t(v)];
        while (p < inc[std::size_t(v)].size() && used[std::size_t(inc[std::size_t(v)][p].first)])
            ++p;
        if (p == inc[std::size_t(v)].size()) {
            if (stack.back().second != -1)
                trail_edges.push_back(copy_edge[std::size_t(stack.back().second)]);
            stack.pop_back();
        } else {
            const auto [id, w] = inc[std::size_t(v)][p];
            used[std::size_t(id)] = 1;
            stack.push_back({w, id});
        }
    }
    std::reverse(trail_edges.begin(), trail_edges.end());
    return EvenClosedWalk::from_edges(g, std::move(trail_edges));
}

EvenClosedWalk walk_of_vector(const Graph& g, const Vec& u) {
    if (u.size() != std::size_t(g.edge_count()))
        throw std::invalid_argument("vector length does not match edge count");
    std::vector<int> times(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        times[i] = int(u[i] < 0 ? -u[i] : u[i]);
    return walk_with_multiplicities(g, times);
}

std::vector<Chord> chords_of(const Graph& g, const EvenClosedWalk& w) {
    const std::vector<int> verts = w.vertex_set();
    auto on_walk = [&](int v) {
        return std::binary_search(verts.begin(), verts.end(), v);
    };
    const BlockDecomposition& blocks = w.subgraph_blocks();
    const EdgeSubgraph& sub = w.subgraph();

    std::vector<Chord> chords;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (w.multiplicity(e) > 0) continue;
        const auto& ed = g.edge(e);
        if (!on_walk(ed.u) || !on_walk(ed.v)) continue;

        const auto bu = blocks.blocks_of_vertex(sub.from_host_vertex[std::size_t(ed.u)]);
        const auto bv = blocks.blocks_of_vertex(sub.from_host_vertex[std::size_t(ed.v)]);
        const bool same_single_block = bu.size() == 1 && bv.size() == 1 && bu[0] == bv[0];
        if (!same_single_block) {
            chords.push_back({e, ChordKind::Bridge});
            continue;
        }
        const std::vector<int> occ_u = w.occurrences_of(ed.u);
        const std::vector<int> occ_v = w.occurrences_of(ed.v);
        int parity = -1;
        for (const int i : occ_u)
            for (const int j : occ_v) {
                const int p = ((j - i) % 2 + 2) % 2;
                if (parity == -1) parity = p;
                else if (parity != p)
                    throw std::domain_error("chord parity ill-defined for this walk");
            }
        // fragments have j-i+1 and L-(j-i)+1 edges: even occurrence gap
        // means two odd fragments
        chords.push_back({e, parity == 0 ? ChordKind::Odd : ChordKind::Even});
    }
    return chords;
}

}  // namespace toric
