#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "toric/binomial.hpp"
#include "toric/classify.hpp"
#include "toric/enumerate.hpp"
#include "toric/graph.hpp"
#include "toric/lattice/circuits.hpp"
#include "toric/lattice/config.hpp"
#include "toric/lattice/graver.hpp"
#include "toric/lattice/markov.hpp"
#include "toric/lattice/ugb.hpp"
#include "toric/walk.hpp"

using namespace toric;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph theta_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
}

Graph bowtie_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph dumbbell() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Graph complete_n(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph triangle_star() {
    return Graph(9, {{0, 1},
                     {0, 2},
                     {1, 2},
                     {0, 3},
                     {0, 4},
                     {3, 4},
                     {1, 5},
                     {1, 6},
                     {5, 6},
                     {2, 7},
                     {2, 8},
                     {7, 8}});
}

Graph chain_tst() {
    return Graph(8, {{0, 1},
                     {0, 2},
                     {1, 2},
                     {2, 3},
                     {3, 4},
                     {4, 5},
                     {2, 5},
                     {4, 6},
                     {4, 7},
                     {6, 7}});
}

Graph hexagon_with_chord() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
}

// one rung pair: two squares bridged on both sides
Graph ladder_one() {
    return Graph(8, {{0, 4},
                     {4, 5},
                     {5, 1},
                     {0, 1},
                     {2, 6},
                     {6, 7},
                     {7, 3},
                     {2, 3},
                     {0, 2},
                     {1, 3}});
}

std::vector<Graph> cross_check_graphs() {
    return {cycle_graph(4), cycle_graph(5),  cycle_graph(6), theta_graph(),
            bowtie_graph(), dumbbell(),      complete_n(4),  complete_n(5),
            triangle_star(), chain_tst(),    hexagon_with_chord(), ladder_one()};
}

std::set<Vec> basis_vectors(const WalkBasis& basis, int edge_count) {
    std::set<Vec> out;
    for (const Binomial& b : basis.elements) out.insert(b.to_vector(edge_count));
    CHECK(out.size() == basis.elements.size());  // no duplicate elements
    return out;
}

std::set<Vec> oracle_vectors(const std::vector<Vec>& vs) {
    return std::set<Vec>(vs.begin(), vs.end());
}

std::vector<u64> degree_multiset(const WalkBasis& basis) {
    std::vector<u64> out;
    for (const Binomial& b : basis.elements) out.push_back(u64(b.degree()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> oracle_degree_multiset(const std::vector<Vec>& vs) {
    std::vector<u64> out;
    for (const Vec& v : vs) out.push_back(lattice::vector_degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool degrees_sorted(const WalkBasis& basis) {
    return std::is_sorted(basis.elements.begin(), basis.elements.end(),
                          [](const Binomial& a, const Binomial& b) {
                              return a.degree() < b.degree();
                          });
}

}  // namespace

TEST_CASE("sign conventions of the two engines agree") {
    for (const Graph& g : cross_check_graphs()) {
        auto A = lattice::VectorConfig::from_graph(g);
        for (const Vec& v : lattice::graver(A).elements) {
            CHECK(v == lattice::sign_canonical(v));
            CHECK(Binomial::from_vector(v).canonical().to_vector(g.edge_count()) == v);
        }
    }
}

TEST_CASE("circuit walks match the oracle") {
    for (const Graph& g : cross_check_graphs()) {
        const std::string edge_list = g.to_edge_list();
        CAPTURE(edge_list);
        auto A = lattice::VectorConfig::from_graph(g);
        WalkBasis walks = enumerate_circuit_walks(g);
        CHECK_FALSE(walks.truncated);
        CHECK(degrees_sorted(walks));
        CHECK(basis_vectors(walks, g.edge_count()) ==
              oracle_vectors(lattice::circuits(A)));
    }
}

TEST_CASE("graver walks match the oracle") {
    for (const Graph& g : cross_check_graphs()) {
        const std::string edge_list = g.to_edge_list();
        CAPTURE(edge_list);
        auto A = lattice::VectorConfig::from_graph(g);
        WalkBasis walks = enumerate_graver_walks(g);
        CHECK_FALSE(walks.truncated);
        CHECK(degrees_sorted(walks));
        CHECK(basis_vectors(walks, g.edge_count()) ==
              oracle_vectors(lattice::graver(A).elements));
    }
}

TEST_CASE("universal basis walks match the oracle") {
    for (const Graph& g : cross_check_graphs()) {
        const std::string edge_list = g.to_edge_list();
        CAPTURE(edge_list);
        auto A = lattice::VectorConfig::from_graph(g);
        WalkBasis walks = enumerate_ugb_walks(g);
        CHECK_FALSE(walks.truncated);
        CHECK(basis_vectors(walks, g.edge_count()) ==
              oracle_vectors(lattice::ugb_elements(A)));
    }
}

TEST_CASE("markov walks match the oracle size and degrees") {
    for (const Graph& g : cross_check_graphs()) {
        const std::string edge_list = g.to_edge_list();
        CAPTURE(edge_list);
        auto A = lattice::VectorConfig::from_graph(g);
        WalkBasis walks = enumerate_markov_walks(g);
        auto oracle = lattice::markov_by_fibers(A);
        CHECK(walks.elements.size() == oracle.elements.size());
        CHECK(degree_multiset(walks) == oracle_degree_multiset(oracle.elements));

        // a Markov basis sits inside the universal basis, and every
        // indispensable element appears in both engines' choices
        std::set<Vec> markov_set = basis_vectors(walks, g.edge_count());
        std::set<Vec> ugb_set =
            basis_vectors(enumerate_ugb_walks(g), g.edge_count());
        CHECK(std::includes(ugb_set.begin(), ugb_set.end(), markov_set.begin(),
                            markov_set.end()));
        for (std::size_t i = 0; i < oracle.elements.size(); ++i)
            if (oracle.indispensable[i])
                CHECK(markov_set.count(oracle.elements[i]) == 1);
    }
}

TEST_CASE("walk classifiers agree with oracle membership tests") {
    for (const Graph& g : cross_check_graphs()) {
        const std::string edge_list = g.to_edge_list();
        CAPTURE(edge_list);
        auto A = lattice::VectorConfig::from_graph(g);
        auto oracle = lattice::markov_by_fibers(A);
        std::set<Vec> indispensable;
        for (std::size_t i = 0; i < oracle.elements.size(); ++i)
            if (oracle.indispensable[i]) indispensable.insert(oracle.elements[i]);

        for (const Vec& v : lattice::graver(A).elements) {
            EvenClosedWalk w = walk_of_vector(g, v);
            CHECK(is_primitive_walk(w));
            CHECK(binomial_of_walk(w).canonical().to_vector(g.edge_count()) == v);
            CHECK(is_mixed(w) == lattice::in_ugb(A, v));
            CHECK_NOTHROW(sinks_of(w));  // asserts each sink is a cut vertex
            const bool indis = is_indispensable_walk(g, w);
            CHECK(indis == (indispensable.count(v) == 1));
            if (indis) CHECK(is_minimal_walk(g, w));
        }
    }
}

TEST_CASE("bipartite graphs collapse the hierarchy") {
    for (const Graph& g :
         {cycle_graph(4), cycle_graph(6), hexagon_with_chord(), ladder_one()}) {
        REQUIRE(is_bipartite(g));
        auto circuits = basis_vectors(enumerate_circuit_walks(g), g.edge_count());
        auto graver = basis_vectors(enumerate_graver_walks(g), g.edge_count());
        auto ugb = basis_vectors(enumerate_ugb_walks(g), g.edge_count());
        CHECK(circuits == graver);
        CHECK(ugb == graver);
    }
}

TEST_CASE("frozen basis sizes on the worked families") {
    auto star = triangle_star();
    WalkBasis c = enumerate_circuit_walks(star);
    CHECK(c.elements.size() == 9);
    CHECK(degree_multiset(c) == std::vector<u64>{3, 3, 3, 4, 4, 4, 5, 5, 5});
    WalkBasis gr = enumerate_graver_walks(star);
    CHECK(gr.elements.size() == 10);
    CHECK(gr.elements.back().degree() == 6);  // the Euler walk element
    CHECK(enumerate_ugb_walks(star).elements.size() == 9);
    WalkBasis mk = enumerate_markov_walks(star);
    CHECK(degree_multiset(mk) == std::vector<u64>{3, 3, 3, 4, 4, 4});

    auto k4 = complete_n(4);
    CHECK(enumerate_circuit_walks(k4).elements.size() == 3);
    CHECK(enumerate_graver_walks(k4).elements.size() == 3);
    CHECK(enumerate_ugb_walks(k4).elements.size() == 3);
    CHECK(enumerate_markov_walks(k4).elements.size() == 2);

    auto k5 = complete_n(5);
    WalkBasis k5g = enumerate_graver_walks(k5);
    CHECK(k5g.elements.size() == 30);
    CHECK(k5g.elements.back().degree() == 3);
    WalkBasis k5m = enumerate_markov_walks(k5);
    CHECK(k5m.elements.size() == 10);
    CHECK(degree_multiset(k5m) == std::vector<u64>(10, 2));

    auto lad = ladder_one();
    CHECK(enumerate_markov_walks(lad).elements.size() == 3);
    CHECK(enumerate_graver_walks(lad).elements.size() == 6);

    CHECK(enumerate_markov_walks(hexagon_with_chord()).elements.size() == 2);
    CHECK(enumerate_markov_walks(theta_graph()).elements.size() == 1);
    CHECK(enumerate_graver_walks(dumbbell()).elements.size() == 1);
    CHECK(enumerate_graver_walks(dumbbell()).elements.front().degree() == 4);
}

TEST_CASE("degree caps and truncation") {
    auto k4 = complete_n(4);
    WalkBasis tight = enumerate_graver_walks(k4, 1);
    CHECK(tight.elements.empty());
    CHECK(tight.truncated);
    WalkBasis squares = enumerate_graver_walks(k4, 2);
    CHECK(squares.elements.size() == 3);

    auto k6 = complete_n(6);
    CHECK_THROWS_WITH(enumerate_graver_walks(k6),
                      "degree cap required above 14 edges");
    CHECK_THROWS_AS(enumerate_ugb_walks(k6), std::invalid_argument);
    WalkBasis k6sq = enumerate_graver_walks(k6, 2);
    CHECK(k6sq.elements.size() == 45);
    CHECK(k6sq.truncated);
    for (const Binomial& b : k6sq.elements) CHECK(b.degree() == 2);

    // a full-range cap on a bipartite family does not trip the flag
    auto lad = ladder_one();
    WalkBasis full = enumerate_graver_walks(lad, 5);
    CHECK(full.elements.size() == 6);
    CHECK_FALSE(full.truncated);
}

TEST_CASE("enumeration is deterministic") {
    auto star = triangle_star();
    WalkBasis a = enumerate_graver_walks(star);
    WalkBasis b = enumerate_graver_walks(star);
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        CHECK(a.elements[i] == b.elements[i]);
    WalkBasis ma = enumerate_markov_walks(star);
    WalkBasis mb = enumerate_markov_walks(star);
    REQUIRE(ma.elements.size() == mb.elements.size());
    for (std::size_t i = 0; i < ma.elements.size(); ++i)
        CHECK(ma.elements[i] == mb.elements[i]);
}
