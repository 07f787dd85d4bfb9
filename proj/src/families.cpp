#include "toric/families.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

namespace {

std::string numbered(const char* stem, int i) {
    return std::string(stem) + std::to_string(i);
}

}  // namespace

Graph ladder_graph(int n) {
    if (n < 1) throw std::invalid_argument("ladder requires n >= 1");
    // v_1..v_{n+1}, u_1..u_{n+1}, then s, t, x, y for 1..n
    const int v0 = 0, u0 = n + 1, s0 = 2 * (n + 1), t0 = s0 + n, x0 = t0 + n,
              y0 = x0 + n;
    std::vector<std::string> labels(std::size_t(6 * n + 2));
    for (int i = 1; i <= n + 1; ++i) {
        labels[std::size_t(v0 + i - 1)] = numbered("v", i);
        labels[std::size_t(u0 + i - 1)] = numbered("u", i);
    }
    for (int i = 1; i <= n; ++i) {
        labels[std::size_t(s0 + i - 1)] = numbered("s", i);
        labels[std::size_t(t0 + i - 1)] = numbered("t", i);
        labels[std::size_t(x0 + i - 1)] = numbered("x", i);
        labels[std::size_t(y0 + i - 1)] = numbered("y", i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(v0 + i, s0 + i);
        edges.emplace_back(s0 + i, t0 + i);
        edges.emplace_back(t0 + i, v0 + i + 1);
        edges.emplace_back(v0 + i, v0 + i + 1);
        edges.emplace_back(u0 + i, x0 + i);
        edges.emplace_back(x0 + i, y0 + i);
        edges.emplace_back(y0 + i, u0 + i + 1);
        edges.emplace_back(u0 + i, u0 + i + 1);
    }
    edges.emplace_back(v0, u0);
    edges.emplace_back(v0 + n, u0 + n);
    return Graph(6 * n + 2, edges, std::move(labels));
}

Graph triangle_tree(int n, int r) {
    if (n % 2 == 0) throw std::invalid_argument("n must be odd");
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree(std::size_t(n), 2);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    int next = n;
    for (int round = 0; round < r; ++round) {
        std::vector<int> open;
        for (int v = 0; v < int(degree.size()); ++v)
            if (degree[std::size_t(v)] == 2) open.push_back(v);
        for (int v : open) {
            // fresh cycle v, next, next+1, ..., next+n-2
            degree[std::size_t(v)] += 2;
            edges.emplace_back(v, next);
            for (int j = 0; j + 1 < n - 1; ++j) edges.emplace_back(next + j, next + j + 1);
            edges.emplace_back(next + n - 2, v);
            degree.insert(degree.end(), std::size_t(n - 1), 2);
            next += n - 1;
        }
    }
    return Graph(next, edges);
}

Graph subdivide(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("subdivision requires k >= 2");
    std::vector<std::pair<int, int>> edges;
    int next = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        int at = g.edge(e).u;
        for (int j = 0; j + 1 < k; ++j) {
            edges.emplace_back(at, next);
            at = next++;
        }
        edges.emplace_back(at, g.edge(e).v);
    }
    return Graph(next, edges);
}

Graph complete_graph(int n) {
    if (n < 3) throw std::invalid_argument("complete graph requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

i64 expected_euler_degree(int n, int r, int k) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("n must be odd and >= 3");
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    i64 pow = 1;
    for (int i = 0; i < r; ++i) pow = checked_mul(pow, i64(n - 1));
    if ((pow - 1) % i64(n - 2) != 0)
        throw std::logic_error("geometric sum is not integral");
    const i64 q = (pow - 1) / i64(n - 2);
    const i64 twice = checked_add(i64(n), checked_mul(checked_mul(i64(n), i64(n)), q));
    if (twice % 2 != 0) throw std::logic_error("euler degree is not integral");
    return checked_mul(i64(k), twice / 2);
}

i64 expected_max_circuit_degree(int n, int r, int k) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("n must be odd and >= 3");
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return checked_add(checked_mul(i64(k), i64(n)),
                       checked_mul(i64(2 * r - 1), checked_mul(i64(k), i64(n - 1))));
}

std::pair<i64, i64> expected_ladder_sizes(int n) {
    if (n < 1) throw std::invalid_argument("ladder requires n >= 1");
    i64 pow = 1;
    for (int i = 0; i < n; ++i) pow = checked_mul(pow, i64(4));
    return {2 * i64(n) + 1, checked_add(2 * i64(n), pow)};
}

std::pair<i64, i64> expected_ladder_max_degrees(int n) {
    if (n < 1) throw std::invalid_argument("ladder requires n >= 1");
    return {i64(n) + 1, 3 * i64(n) + 1};
}

std::pair<i64, i64> expected_kn_degrees(int n) {
    if (n < 4) throw std::invalid_argument("complete-graph degrees require n >= 4");
    return {i64(n) - 2, 2};
}

}  // namespace toric
