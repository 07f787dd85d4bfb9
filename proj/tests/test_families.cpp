#include <vector>
#include <set>
#include <utility>

#include "doctest.h"
#include "toric/blocks.hpp"
#include "toric/enumerate.hpp"
#include "toric/families.hpp"
#include "toric/graph.hpp"

using namespace toric;

TEST_CASE("ladder family layout") {
    for (int n : {1, 2, 3, 4}) {
        Graph g = ladder_graph(n);
        CHECK(g.vertex_count() == 6 * n + 2);
        CHECK(g.edge_count() == 8 * n + 2);
        CHECK(is_bipartite(g));
        CHECK(g.is_connected());
        CHECK(g.to_edge_list() == ladder_graph(n).to_edge_list());
    }
    Graph one = ladder_graph(1);
    CHECK(one.vertex_name(0) == "v1");
    CHECK(one.vertex_name(2) == "u1");
    CHECK(one.vertex_name(4) == "s1");
    CHECK_THROWS_AS(ladder_graph(0), std::invalid_argument);
}

TEST_CASE("tree-of-cycles family layout") {
    Graph base = triangle_tree(3, 0);
    CHECK(base.vertex_count() == 3);
    CHECK(base.edge_count() == 3);

    Graph one = triangle_tree(3, 1);
    CHECK(one.vertex_count() == 9);
    CHECK(one.edge_count() == 12);
    Graph two = triangle_tree(3, 2);
    CHECK(two.vertex_count() == 21);
    CHECK(two.edge_count() == 30);
    CHECK(triangle_tree(5, 1).edge_count() == 30);

    for (const Graph* g : {&one, &two}) {
        std::set<int> degs;
        for (int v = 0; v < g->vertex_count(); ++v) degs.insert(g->degree(v));
        CHECK(degs == std::set<int>{2, 4});
        BlockDecomposition bd = block_decomposition(*g);
        for (std::size_t b = 0; b < bd.kinds.size(); ++b) {
            CHECK(bd.kinds[b] == BlockKind::Cycle);
            CHECK(bd.block_edges[b].size() == 3);
        }
    }
    CHECK(two.to_edge_list() == triangle_tree(3, 2).to_edge_list());

    CHECK_THROWS_WITH(triangle_tree(4, 1), "n must be odd");
    CHECK_THROWS_AS(triangle_tree(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(triangle_tree(3, -1), std::invalid_argument);

    // the edge count is twice the Euler-trail binomial degree
    const std::vector<std::pair<int, int>> params{{3, 1}, {3, 2}, {3, 3},
                                                  {5, 1}, {5, 2}, {7, 1}};
    for (auto [n, r] : params)
        CHECK(i64(triangle_tree(n, r).edge_count()) == 2 * expected_euler_degree(n, r, 1));
}

TEST_CASE("subdivision") {
    Graph nine = subdivide(triangle_tree(3, 0), 3);
    CHECK(nine.vertex_count() == 9);
    CHECK(nine.edge_count() == 9);
    for (int v = 0; v < 9; ++v) CHECK(nine.degree(v) == 2);

    Graph path = subdivide(Graph(2, {{0, 1}}), 2);
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_count() == 2);

    CHECK(subdivide(triangle_tree(3, 1), 3).edge_count() == 36);

    // blocks persist with scaled edge counts
    Graph bow(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    BlockDecomposition before = block_decomposition(bow);
    BlockDecomposition after = block_decomposition(subdivide(bow, 2));
    REQUIRE(after.block_count() == before.block_count());
    std::multiset<std::size_t> sizes_before, sizes_after;
    for (const auto& be : before.block_edges) sizes_before.insert(2 * be.size());
    for (const auto& be : after.block_edges) sizes_after.insert(be.size());
    CHECK(sizes_before == sizes_after);

    CHECK(subdivide(bow, 3).to_edge_list() == subdivide(bow, 3).to_edge_list());
    CHECK_THROWS_AS(subdivide(bow, 1), std::invalid_argument);
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK_THROWS_AS(complete_graph(2), std::invalid_argument);
}

TEST_CASE("closed-form family statistics") {
    CHECK(expected_euler_degree(3, 1, 1) == 6);
    CHECK(expected_euler_degree(3, 2, 1) == 15);
    CHECK(expected_euler_degree(3, 2, 3) == 45);
    CHECK(expected_euler_degree(5, 1, 1) == 15);
    for (int r = 1; r <= 6; ++r) {
        i64 doubling = 9 * (i64(1) << (r - 1)) - 3;
        CHECK(expected_euler_degree(3, r, 1) == doubling);
    }

    CHECK(expected_max_circuit_degree(3, 1, 1) == 5);
    CHECK(expected_max_circuit_degree(3, 2, 1) == 9);
    CHECK(expected_max_circuit_degree(3, 1, 3) == 15);

    CHECK(expected_ladder_sizes(1) == std::pair<i64, i64>{3, 6});
    CHECK(expected_ladder_sizes(2) == std::pair<i64, i64>{5, 20});
    CHECK(expected_ladder_sizes(3) == std::pair<i64, i64>{7, 70});
    CHECK(expected_ladder_sizes(4) == std::pair<i64, i64>{9, 264});
    CHECK(expected_ladder_max_degrees(2) == std::pair<i64, i64>{3, 7});

    CHECK(expected_kn_degrees(4) == std::pair<i64, i64>{2, 2});
    CHECK(expected_kn_degrees(5) == std::pair<i64, i64>{3, 2});
    CHECK(expected_kn_degrees(7) == std::pair<i64, i64>{5, 2});
    CHECK_THROWS_AS(expected_kn_degrees(3), std::invalid_argument);
}

TEST_CASE("family basis sizes at small parameters") {
    Graph lad = ladder_graph(1);
    auto [markov_size, common_size] = expected_ladder_sizes(1);
    CHECK(i64(enumerate_markov_walks(lad).elements.size()) == markov_size);
    WalkBasis gr = enumerate_graver_walks(lad);
    CHECK(i64(gr.elements.size()) == common_size);
    CHECK(i64(enumerate_circuit_walks(lad).elements.size()) == common_size);
    CHECK(i64(enumerate_ugb_walks(lad).elements.size()) == common_size);
    auto [deg_m, deg_g] = expected_ladder_max_degrees(1);
    CHECK(i64(enumerate_markov_walks(lad).elements.back().degree()) == deg_m);
    CHECK(i64(gr.elements.back().degree()) == deg_g);

    Graph tri = triangle_tree(3, 1);
    WalkBasis tg = enumerate_graver_walks(tri);
    CHECK(tg.elements.size() == 10);
    CHECK(i64(tg.elements.back().degree()) == expected_euler_degree(3, 1, 1));
    WalkBasis tc = enumerate_circuit_walks(tri);
    CHECK(i64(tc.elements.back().degree()) == expected_max_circuit_degree(3, 1, 1));
}
