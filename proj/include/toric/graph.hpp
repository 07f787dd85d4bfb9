#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// Simple undirected graph. Vertices are 0-based ints; edges are unordered
// pairs with stable indices (the construction order). Loops and parallel
// edges are rejected.
class Graph {
public:
    struct Edge {
        int u, v;  // normalized u < v
    };

    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[std::size_t(e)]; }

    // (neighbor, edge index) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& adjacent(int v) const { return adj_[std::size_t(v)]; }
    int degree(int v) const { return int(adj_[std::size_t(v)].size()); }

    // -1 when {u,v} is not an edge.
    int edge_index(int u, int v) const;
    int other_end(int e, int v) const;

    bool is_connected() const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string vertex_name(int v) const;

    // Text form: optional '#' comment lines, then "n m", then m lines "u v".
    static Graph parse_edge_list(std::istream& in);
    static Graph parse_edge_list(const std::string& text);
    std::string to_edge_list() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::string> labels_;
};

// Two-coloring if one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace toric
