#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "toric/blocks.hpp"
#include "toric/cycles.hpp"
#include "toric/graph.hpp"

using namespace toric;

namespace {

Graph bowtie() {
    // two triangles sharing vertex 0
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

// independent cycle count: edge subsets that induce a connected 2-regular graph
int brute_cycle_count(const Graph& g) {
    const int m = g.edge_count();
    int count = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> deg(std::size_t(g.vertex_count()), 0);
        std::vector<int> picked;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) {
                picked.push_back(e);
                ++deg[std::size_t(g.edge(e).u)];
                ++deg[std::size_t(g.edge(e).v)];
            }
        bool two_regular = true;
        for (const int d : deg)
            if (d != 0 && d != 2) two_regular = false;
        if (!two_regular || picked.size() < 3) continue;
        // connectivity over picked edges
        std::vector<int> comp(std::size_t(g.vertex_count()), -1);
        std::vector<int> stack{g.edge(picked[0]).u};
        comp[std::size_t(stack[0])] = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.adjacent(v)) {
                if (!(mask & (1u << e))) continue;
                if (comp[std::size_t(w)] == -1) {
                    comp[std::size_t(w)] = 0;
                    stack.push_back(w);
                }
            }
        }
        bool connected = true;
        for (const int e : picked)
            if (comp[std::size_t(g.edge(e).u)] == -1) connected = false;
        if (connected) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edge(0).u == 1);  // endpoints normalized
    CHECK(g.edge_index(1, 2) == 0);
    CHECK(g.edge_index(2, 1) == 0);
    CHECK(g.edge_index(0, 1) == -1);
}

TEST_CASE("edge list round trip and parse errors") {
    const std::string text = "# sample\n4 3\n0 1\n1 2 # trailing note\n2 3\n";
    const Graph g = Graph::parse_edge_list(text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    const Graph h = Graph::parse_edge_list(g.to_edge_list());
    CHECK(h.edge_count() == 3);
    CHECK(h.edge_index(2, 3) == 2);

    CHECK_THROWS_WITH_AS(Graph::parse_edge_list(std::string("")), "empty edge list input",
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph::parse_edge_list(std::string("2 2\n0 1\n")), std::invalid_argument);
    CHECK_THROWS_AS(Graph::parse_edge_list(std::string("2 1\n0 x\n")), std::invalid_argument);
}

TEST_CASE("bipartition") {
    const Graph even_cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    REQUIRE(is_bipartite(even_cycle));
    const auto color = bipartition(even_cycle);
    CHECK(color->at(0) != color->at(1));
    const Graph odd_cycle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(is_bipartite(odd_cycle));
}

TEST_CASE("block decomposition of the bowtie") {
    const Graph g = bowtie();
    const auto d = block_decomposition(g);
    REQUIRE(d.block_count() == 2);
    CHECK(d.kinds[0] == BlockKind::Cycle);
    CHECK(d.kinds[1] == BlockKind::Cycle);
    CHECK(d.cut_vertices == std::vector<int>{0});
    CHECK(d.blocks_of_vertex(0) == std::vector<int>{0, 1});
    CHECK(d.blocks_of_vertex(1).size() == 1);
    // sum of block sizes covers every edge exactly once
    CHECK(d.block_edges[0].size() + d.block_edges[1].size() == 6);
}

TEST_CASE("block decomposition flags disconnected input") {
    const Graph g(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(block_decomposition(g), "graph not connected", std::invalid_argument);
}

TEST_CASE("block kinds: cut edge and non-cycle block") {
    // triangle - bar - K4
    Graph g(7, {{0, 1},
                {1, 2},
                {2, 0},
                {2, 3},
                {3, 4},
                {3, 5},
                {3, 6},
                {4, 5},
                {4, 6},
                {5, 6}});
    const auto d = block_decomposition(g);
    REQUIRE(d.block_count() == 3);
    int cuts = 0, cycles = 0, others = 0;
    for (const auto k : d.kinds) {
        if (k == BlockKind::CutEdge) ++cuts;
        if (k == BlockKind::Cycle) ++cycles;
        if (k == BlockKind::Other) ++others;
    }
    CHECK(cuts == 1);
    CHECK(cycles == 1);
    CHECK(others == 1);  // K4 block
    CHECK(d.cut_vertices == std::vector<int>{2, 3});
}

TEST_CASE("block tree distances") {
    // path of three triangles glued at vertices: t0 -v2- t1 -v4- t2
    Graph g(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}, {6, 4}});
    const auto t = block_tree(g);
    REQUIRE(t.decomposition.block_count() == 3);
    // find the two leaf blocks: distance passes through the middle one
    int a = -1, b = -1;
    for (int i = 0; i < 3; ++i) {
        bool has2 = false, has6 = false;
        for (const int v : t.decomposition.block_vertices[std::size_t(i)]) {
            if (v == 0) has2 = true;
            if (v == 6) has6 = true;
        }
        if (has2) a = i;
        if (has6) b = i;
    }
    CHECK(t.internal_block_distance(a, b) == 1);
    CHECK_THROWS_AS(t.internal_block_distance(a, a), std::invalid_argument);
}

TEST_CASE("single vertex graph decomposes to nothing") {
    const Graph g(1, {});
    const auto d = block_decomposition(g);
    CHECK(d.block_count() == 0);
    CHECK(d.cut_vertices.empty());
}

TEST_CASE("cycle enumeration: canonical forms on K4") {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto enumeration = enumerate_cycles(k4);
    CHECK_FALSE(enumeration.capped);
    CHECK(int(enumeration.cycles.size()) == brute_cycle_count(k4));  // 7
    CHECK(enumeration.cycles.size() == 7);
    for (const auto& c : enumeration.cycles) {
        CHECK(c[0] == *std::min_element(c.begin(), c.end()));
        CHECK(c[1] < c.back());
        CHECK_NOTHROW(cycle_edges(k4, c));
    }
    // 4 triangles then 3 squares
    CHECK(enumeration.cycles[3].size() == 3);
    CHECK(enumeration.cycles[4].size() == 4);
}

TEST_CASE("cycle enumeration agrees with brute force on small graphs") {
    const Graph bt = bowtie();
    CHECK(enumerate_cycles(bt).cycles.size() == std::size_t(brute_cycle_count(bt)));
    const Graph petersen_ish(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}});
    CHECK(enumerate_cycles(petersen_ish).cycles.size() ==
          std::size_t(brute_cycle_count(petersen_ish)));
}

TEST_CASE("cycle enumeration cap semantics") {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto capped = enumerate_cycles(k4, 3);
    CHECK(capped.cycles.size() == 4);  // triangles only
    CHECK(capped.capped);              // squares were cut off
    const auto roomy = enumerate_cycles(k4, 4);
    CHECK(roomy.cycles.size() == 7);
    CHECK_FALSE(roomy.capped);
}
