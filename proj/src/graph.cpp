#include "toric/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace toric {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!labels_.empty() && int(labels_.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    adj_.resize(std::size_t(n_));
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loops are not allowed");
        const int u = std::min(a, b), v = std::max(a, b);
        const int idx = int(edges_.size());
        edges_.push_back({u, v});
        adj_[std::size_t(u)].push_back({v, idx});
        adj_[std::size_t(v)].push_back({u, idx});
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 1; i < nb.size(); ++i)
            if (nb[i].first == nb[i - 1].first)
                throw std::invalid_argument("parallel edges are not allowed");
    }
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
    const auto& nb = adj_[std::size_t(u)];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, int>{v, -1});
    if (it != nb.end() && it->first == v) return it->second;
    return -1;
}

int Graph::other_end(int e, int v) const {
    const Edge& ed = edges_[std::size_t(e)];
    return ed.u == v ? ed.v : ed.u;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(std::size_t(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (const auto& [w, e] : adj_[std::size_t(v)]) {
            (void)e;
            if (!seen[std::size_t(w)]) {
                seen[std::size_t(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n_;
}

std::string Graph::vertex_name(int v) const {
    if (!labels_.empty()) return labels_[std::size_t(v)];
    return std::to_string(v);
}

Graph Graph::parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            const auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            bool blank = true;
            for (const char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (blank) continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw std::invalid_argument("empty edge list input");
    std::istringstream hs(header);
    int n = 0, m = 0;
    if (!(hs >> n >> m))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected \"n m\" header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row))
            throw std::invalid_argument("expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(i));
        std::istringstream rs(row);
        int u = 0, v = 0;
        if (!(rs >> u >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected \"u v\"");
        edges.push_back({u, v});
    }
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("invalid edge list: " + std::string(e.what()));
    }
}

Graph Graph::parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (const Edge& e : edges_) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(std::size_t(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[std::size_t(s)] != -1) continue;
        color[std::size_t(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const auto& [w, e] : g.adjacent(v)) {
                (void)e;
                if (color[std::size_t(w)] == -1) {
                    color[std::size_t(w)] = 1 - color[std::size_t(v)];
                    q.push(w);
                } else if (color[std::size_t(w)] == color[std::size_t(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace toric
