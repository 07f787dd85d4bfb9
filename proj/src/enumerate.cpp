#include "toric/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "toric/blocks.hpp"
#include "toric/classify.hpp"
#include "toric/cycles.hpp"
#include "toric/lattice/config.hpp"
#include "toric/walk.hpp"

namespace toric {

namespace {

// Deterministic closed trail over a tree-of-cycles shape with its cut edges
// doubled: every vertex of the doubled multigraph has even degree, so a
// trail through all copies exists whenever the shape is connected.
EvenClosedWalk realize_shape_walk(const Graph& g, const std::vector<int>& edges) {
    EdgeSubgraph sub = subgraph_on_edges(g, edges);
    BlockDecomposition bd = block_decomposition(sub.graph);
    std::vector<int> times(std::size_t(g.edge_count()), 0);
    for (int ce = 0; ce < sub.graph.edge_count(); ++ce) {
        const bool doubled = bd.kinds[std::size_t(bd.edge_block[std::size_t(ce)])] ==
                             BlockKind::CutEdge;
        times[std::size_t(sub.to_host_edge[std::size_t(ce)])] = doubled ? 2 : 1;
    }
    return walk_with_multiplicities(g, times);
}

// Backtracking growth of tree-of-cycles shapes: start from one cycle, then
// repeatedly glue a fresh cycle at a vertex open for a second block or hang
// one off such a vertex through a path of fresh vertices. Emitted shapes are
// deduplicated by edge set; validity (the odd-parity side condition) is
// filtered afterwards through is_primitive_subgraph.
class ShapeSearch {
public:
    ShapeSearch(const Graph& g, std::optional<u64> cap) : g_(g) {
        if (cap) cap_units_ = 2 * long(*cap);
        long max_len = g.vertex_count();
        if (cap_units_) max_len = std::min(max_len, *cap_units_);
        CycleEnumeration ce = enumerate_cycles(g_, int(max_len));
        truncated_ = ce.capped;
        single_cycles_only_ = is_bipartite(g_);
        for (const auto& cyc : ce.cycles) {
            cyc_edges_.push_back(cycle_edges(g_, cyc));
            cyc_verts_.push_back(cyc);
        }
        cycles_at_.resize(std::size_t(g.vertex_count()));
        for (std::size_t c = 0; c < cyc_verts_.size(); ++c)
            for (int v : cyc_verts_[c]) cycles_at_[std::size_t(v)].push_back(int(c));
        in_struct_.assign(std::size_t(g.vertex_count()), 0);
        on_path_.assign(std::size_t(g.vertex_count()), 0);
        block_count_.assign(std::size_t(g.vertex_count()), 0);
        edge_used_.assign(std::size_t(g.edge_count()), 0);
    }

    std::set<std::vector<int>> run() {
        for (std::size_t c = 0; c < cyc_verts_.size(); ++c) {
            add_cycle(int(c), -1);
            grow();
            remove_cycle(int(c), -1);
        }
        return std::move(emitted_);
    }

    bool truncated() const { return truncated_; }

private:
    // True when everything past this bound must be cut. The flag only trips
    // for bounds a real shape could reach (shapes never exceed twice the
    // host's edge count in traversal units), keeping full-range runs
    // honestly marked complete.
    bool prune(long needed_units) {
        if (!cap_units_ || needed_units <= *cap_units_) return false;
        if (needed_units <= 2L * g_.edge_count()) truncated_ = true;
        return true;
    }

    void add_cycle(int c, int anchor) {
        for (int v : cyc_verts_[std::size_t(c)]) {
            if (v == anchor) {
                ++block_count_[std::size_t(v)];
            } else {
                in_struct_[std::size_t(v)] = 1;
                block_count_[std::size_t(v)] = 1;
            }
        }
        for (int e : cyc_edges_[std::size_t(c)]) {
            edge_used_[std::size_t(e)] = 1;
            cur_edges_.push_back(e);
        }
        units_ += long(cyc_edges_[std::size_t(c)].size());
    }

    void remove_cycle(int c, int anchor) {
        for (int v : cyc_verts_[std::size_t(c)]) {
            if (v == anchor) {
                --block_count_[std::size_t(v)];
            } else {
                in_struct_[std::size_t(v)] = 0;
                block_count_[std::size_t(v)] = 0;
            }
        }
        for (int e : cyc_edges_[std::size_t(c)]) edge_used_[std::size_t(e)] = 0;
        cur_edges_.resize(cur_edges_.size() - cyc_edges_[std::size_t(c)].size());
        units_ -= long(cyc_edges_[std::size_t(c)].size());
    }

    // Vertex at which cycle c could join the current shape: the single
    // shape vertex on c, open for a second block; -1 when none.
    int glue_anchor(int c) const {
        int anchor = -1;
        for (int v : cyc_verts_[std::size_t(c)]) {
            if (!in_struct_[std::size_t(v)]) continue;
            if (anchor >= 0) return -1;  // touches the shape twice
            anchor = v;
        }
        if (anchor >= 0 && block_count_[std::size_t(anchor)] != 1) return -1;
        return anchor;
    }

    bool cycle_fresh_except(int c, int w) const {
        for (int v : cyc_verts_[std::size_t(c)])
            if (v != w && (in_struct_[std::size_t(v)] || on_path_[std::size_t(v)]))
                return false;
        return true;
    }

    void grow() {
        std::vector<int> key = cur_edges_;
        std::sort(key.begin(), key.end());
        if (!emitted_.insert(std::move(key)).second) return;  // subtree seen
        if (single_cycles_only_) return;  // no odd cycles: no leaf block can be odd

        for (std::size_t c = 0; c < cyc_verts_.size(); ++c) {
            int anchor = glue_anchor(int(c));
            if (anchor < 0) continue;
            if (prune(units_ + long(cyc_edges_[c].size()))) continue;
            add_cycle(int(c), anchor);
            grow();
            remove_cycle(int(c), anchor);
        }
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!in_struct_[std::size_t(v)] || block_count_[std::size_t(v)] != 1)
                continue;
            std::vector<int> pverts, pedges;
            extend_path(v, v, pverts, pedges);
        }
    }

    void extend_path(int origin, int u, std::vector<int>& pverts,
                     std::vector<int>& pedges) {
        const long plen = long(pedges.size());
        if (plen > 0) {
            for (int c : cycles_at_[std::size_t(u)]) {
                if (!cycle_fresh_except(c, u)) continue;
                if (prune(units_ + 2 * plen + long(cyc_edges_[std::size_t(c)].size())))
                    continue;
                apply_path(origin, pverts, pedges);
                add_cycle(c, u);
                grow();
                remove_cycle(c, u);
                revert_path(origin, pverts, pedges);
            }
        }
        if (prune(units_ + 2 * (plen + 1) + 3)) return;
        for (auto [nb, e] : g_.adjacent(u)) {
            if (in_struct_[std::size_t(nb)] || on_path_[std::size_t(nb)]) continue;
            on_path_[std::size_t(nb)] = 1;
            pverts.push_back(nb);
            pedges.push_back(e);
            extend_path(origin, nb, pverts, pedges);
            pverts.pop_back();
            pedges.pop_back();
            on_path_[std::size_t(nb)] = 0;
        }
    }

    void apply_path(int origin, const std::vector<int>& pverts,
                    const std::vector<int>& pedges) {
        ++block_count_[std::size_t(origin)];
        for (int v : pverts) {
            in_struct_[std::size_t(v)] = 1;
            block_count_[std::size_t(v)] = 2;
        }
        for (int e : pedges) {
            edge_used_[std::size_t(e)] = 1;
            cur_edges_.push_back(e);
        }
        units_ += 2 * long(pedges.size());
    }

    void revert_path(int origin, const std::vector<int>& pverts,
                     const std::vector<int>& pedges) {
        --block_count_[std::size_t(origin)];
        for (int v : pverts) {
            in_struct_[std::size_t(v)] = 0;
            block_count_[std::size_t(v)] = 0;
        }
        for (int e : pedges) edge_used_[std::size_t(e)] = 0;
        cur_edges_.resize(cur_edges_.size() - pedges.size());
        units_ -= 2 * long(pedges.size());
    }

    const Graph& g_;
    std::optional<long> cap_units_;  // cap on cycle edges + twice cut edges
    bool truncated_ = false;
    bool single_cycles_only_ = false;
    std::vector<std::vector<int>> cyc_edges_, cyc_verts_;
    std::vector<std::vector<int>> cycles_at_;
    std::vector<char> in_struct_, on_path_, edge_used_;
    std::vector<int> block_count_;
    std::vector<int> cur_edges_;
    long units_ = 0;
    std::set<std::vector<int>> emitted_;
};

struct FoundWalk {
    Binomial binomial;
    EvenClosedWalk walk;
};

struct GraverWalks {
    std::vector<FoundWalk> items;
    bool truncated = false;
};

GraverWalks graver_walks(const Graph& g, std::optional<u64> degree_cap) {
    if (!degree_cap && g.edge_count() > 14)
        throw std::invalid_argument("degree cap required above 14 edges");
    ShapeSearch search(g, degree_cap);
    std::set<std::vector<int>> shapes = search.run();
    GraverWalks out;
    out.truncated = search.truncated();
    for (const std::vector<int>& shape : shapes) {
        if (!is_primitive_subgraph(g, shape)) continue;
        EvenClosedWalk w = realize_shape_walk(g, shape);
        Binomial b = binomial_of_walk(w).canonical();
        if (!b.is_reduced())
            throw std::logic_error("valid shape realized an unreduced binomial");
        out.items.push_back({std::move(b), std::move(w)});
    }
    std::sort(out.items.begin(), out.items.end(),
              [](const FoundWalk& a, const FoundWalk& b) {
                  return degree_lex_less(a.binomial, b.binomial);
              });
    return out;
}

Vec vertex_degrees(const Graph& g, const Vec& monomial) {
    Vec d(std::size_t(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        d[std::size_t(g.edge(e).u)] += monomial[std::size_t(e)];
        d[std::size_t(g.edge(e).v)] += monomial[std::size_t(e)];
    }
    return d;
}

// p - sign*m when the result stays componentwise nonnegative.
std::optional<Vec> apply_move(const Vec& p, const Vec& m, int sign) {
    Vec q = p;
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] -= sign * m[i];
        if (q[i] < 0) return std::nullopt;
    }
    return q;
}

}  // namespace

WalkBasis enumerate_circuit_walks(const Graph& g) {
    CycleEnumeration ce = enumerate_cycles(g, g.vertex_count());
    std::set<std::vector<int>> shapes;
    std::vector<std::vector<int>> odd_verts, odd_edges;
    std::vector<std::vector<char>> odd_has(0);
    for (const auto& cyc : ce.cycles) {
        std::vector<int> edges = cycle_edges(g, cyc);
        if (cyc.size() % 2 == 0) {
            std::sort(edges.begin(), edges.end());
            shapes.insert(std::move(edges));
        } else {
            odd_verts.push_back(cyc);
            odd_edges.push_back(std::move(edges));
            std::vector<char> has(std::size_t(g.vertex_count()), 0);
            for (int v : cyc) has[std::size_t(v)] = 1;
            odd_has.push_back(std::move(has));
        }
    }
    for (std::size_t i = 0; i < odd_verts.size(); ++i) {
        for (std::size_t j = i + 1; j < odd_verts.size(); ++j) {
            int shared = 0;
            for (int v : odd_verts[j]) shared += odd_has[i][std::size_t(v)];
            if (shared == 1) {
                std::vector<int> edges = odd_edges[i];
                edges.insert(edges.end(), odd_edges[j].begin(), odd_edges[j].end());
                std::sort(edges.begin(), edges.end());
                shapes.insert(std::move(edges));
            } else if (shared == 0) {
                // every connecting path through fresh vertices
                std::vector<char> blocked(std::size_t(g.vertex_count()), 0);
                for (int v : odd_verts[i]) blocked[std::size_t(v)] = 1;
                for (int v : odd_verts[j]) blocked[std::size_t(v)] = 1;
                std::vector<int> path;
                auto dfs = [&](auto&& self, int u) -> void {
                    for (auto [nb, e] : g.adjacent(u)) {
                        if (odd_has[j][std::size_t(nb)]) {
                            std::vector<int> edges = odd_edges[i];
                            edges.insert(edges.end(), odd_edges[j].begin(),
                                         odd_edges[j].end());
                            edges.insert(edges.end(), path.begin(), path.end());
                            edges.push_back(e);
                            std::sort(edges.begin(), edges.end());
                            shapes.insert(std::move(edges));
                            continue;
                        }
                        if (blocked[std::size_t(nb)]) continue;
                        blocked[std::size_t(nb)] = 1;
                        path.push_back(e);
                        self(self, nb);
                        path.pop_back();
                        blocked[std::size_t(nb)] = 0;
                    }
                };
                for (int u : odd_verts[i]) dfs(dfs, u);
            }
        }
    }
    WalkBasis out;
    for (const std::vector<int>& shape : shapes) {
        if (!is_circuit_subgraph(g, shape))
            throw std::logic_error("assembled shape is not a circuit");
        out.elements.push_back(binomial_of_walk(realize_shape_walk(g, shape)).canonical());
    }
    std::sort(out.elements.begin(), out.elements.end(), degree_lex_less);
    return out;
}

WalkBasis enumerate_graver_walks(const Graph& g, std::optional<u64> degree_cap) {
    GraverWalks gw = graver_walks(g, degree_cap);
    WalkBasis out;
    out.truncated = gw.truncated;
    for (FoundWalk& f : gw.items) out.elements.push_back(std::move(f.binomial));
    return out;
}

WalkBasis enumerate_ugb_walks(const Graph& g, std::optional<u64> degree_cap) {
    GraverWalks gw = graver_walks(g, degree_cap);
    WalkBasis out;
    out.truncated = gw.truncated;
    for (FoundWalk& f : gw.items)
        if (is_mixed(f.walk)) out.elements.push_back(std::move(f.binomial));
    return out;
}

WalkBasis enumerate_markov_walks(const Graph& g) {
    const int m = g.edge_count();
    GraverWalks gw = graver_walks(g, u64(std::max(m, 1)));
    if (gw.truncated)
        throw std::logic_error("full-range walk enumeration reported truncation");

    // minimal-walk candidates, grouped by (degree, vertex degree vector)
    std::map<std::pair<u64, Vec>, std::vector<Vec>> groups;
    for (const FoundWalk& f : gw.items) {
        if (!is_minimal_walk(g, f.walk)) continue;
        Vec v = f.binomial.to_vector(m);
        groups[{lattice::vector_degree(v),
                vertex_degrees(g, lattice::positive_part(v))}]
            .push_back(std::move(v));
    }

    // Degree class by degree class: split the monomials reachable from the
    // candidates into components under the moves accepted so far, then keep
    // one spanning set of candidate connectors per class.
    std::vector<Vec> accepted;
    WalkBasis out;
    for (auto& [key, cands] : groups) {
        std::map<Vec, int> comp;
        std::vector<int> parent;
        auto find = [&](int x) {
            while (parent[std::size_t(x)] != x) {
                parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
                x = parent[std::size_t(x)];
            }
            return x;
        };
        auto explore = [&](const Vec& seed) {
            if (comp.count(seed)) return;
            std::vector<Vec> stack{seed};
            comp.emplace(seed, int(parent.size()));
            parent.push_back(int(parent.size()));
            while (!stack.empty()) {
                Vec p = std::move(stack.back());
                stack.pop_back();
                int pid = comp.at(p);
                for (const Vec& mv : accepted) {
                    for (int sign : {1, -1}) {
                        std::optional<Vec> q = apply_move(p, mv, sign);
                        if (!q) continue;
                        auto [it, fresh] = comp.emplace(*q, int(parent.size()));
                        if (fresh) {
                            parent.push_back(int(parent.size()));
                            stack.push_back(*q);
                        }
                        parent[std::size_t(find(it->second))] = find(pid);
                    }
                }
            }
        };
        std::sort(cands.begin(), cands.end(), lattice::norm_lex_less);
        for (const Vec& v : cands) {
            explore(lattice::positive_part(v));
            explore(lattice::negative_part(v));
        }
        std::vector<Vec> picked;
        for (const Vec& v : cands) {
            int a = find(comp.at(lattice::positive_part(v)));
            int b = find(comp.at(lattice::negative_part(v)));
            if (a == b) continue;
            parent[std::size_t(a)] = b;
            picked.push_back(v);
        }
        for (Vec& v : picked) {
            out.elements.push_back(Binomial::from_vector(v).canonical());
            accepted.push_back(std::move(v));
        }
    }
    std::sort(out.elements.begin(), out.elements.end(), degree_lex_less);
    return out;
}

}  // namespace toric
