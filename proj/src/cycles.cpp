#include "toric/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "toric/parallel.hpp"

namespace toric {
namespace {

constexpr int kUncappedEdgeLimit = 24;

// Cycles whose smallest vertex is `root`: depth-first paths through vertices
// larger than root, closing back to root. Each cycle is found exactly once by
// requiring the second vertex to be smaller than the last one.
void cycles_from_root(const Graph& g, int root, int max_len, std::vector<std::vector<int>>& out,
                      std::atomic<bool>& capped) {
    std::vector<int> path{root};
    std::vector<char> on_path(std::size_t(g.vertex_count()), 0);
    on_path[std::size_t(root)] = 1;

    auto dfs = [&](auto&& self, int v) -> void {
        for (const auto& [w, e] : g.adjacent(v)) {
            (void)e;
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (w <= root || on_path[std::size_t(w)]) continue;
            if (int(path.size()) + 1 > max_len) {
                capped.store(true, std::memory_order_relaxed);
                continue;
            }
            on_path[std::size_t(w)] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[std::size_t(w)] = 0;
        }
    };
    dfs(dfs, root);
}

}  // namespace

CycleEnumeration enumerate_cycles(const Graph& g, std::optional<int> max_length) {
    if (!max_length && g.edge_count() > kUncappedEdgeLimit)
        throw std::invalid_argument(
            "cycle enumeration without a length cap is limited to 24 edges; pass max_length");
    const int cap = max_length ? *max_length : g.edge_count();
    std::atomic<bool> capped{false};
    CycleEnumeration result;
    result.cycles = parallel_map_concat<std::vector<int>>(
        std::size_t(g.vertex_count()), [&](std::size_t root) {
            std::vector<std::vector<int>> part;
            cycles_from_root(g, int(root), cap, part, capped);
            return part;
        });
    std::sort(result.cycles.begin(), result.cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    result.capped = capped.load();
    return result;
}

std::vector<int> cycle_edges(const Graph& g, const std::vector<int>& cycle) {
    std::vector<int> edges;
    edges.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        const int e = g.edge_index(u, v);
        if (e < 0) throw std::invalid_argument("vertex sequence is not a cycle of the graph");
        edges.push_back(e);
    }
    return edges;
}

}  // namespace toric
