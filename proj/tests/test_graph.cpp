#include <doctest.h>

#include <random>

#include "bruteforce.hpp"
#include "cliquehit/errors.hpp"
#include "cliquehit/graph.hpp"
#include "cliquehit/random_graphs.hpp"

using namespace cliquehit;

TEST_CASE("bitset basics") {
    Bitset b(70);
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(69);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(!b.test(1));
    CHECK(b.first() == 0);
    CHECK(b.next(0) == 63);
    CHECK(b.next(63) == 64);
    CHECK(b.next(69) == -1);
    CHECK(b.to_vector() == std::vector<int>{0, 63, 64, 69});

    Bitset c = Bitset::of(70, {0, 1});
    CHECK((b & c).count() == 1);
    CHECK((b | c).count() == 5);
    CHECK(b.setminus(c).count() == 3);
    CHECK(b.intersects(c));
    CHECK(Bitset::of(70, {0, 63}).is_subset_of(b));
    CHECK(!b.is_subset_of(c));

    CHECK(Bitset::full(5).count() == 5);
    CHECK(Bitset(0).none());
    CHECK(Bitset::full(64).count() == 64);
}

TEST_CASE("bitset lex order: lowest differing element, containing side first") {
    // {0,1} before {0,2}: differ at 1, first set contains it
    CHECK(Bitset::of(4, {0, 1}).lex_less(Bitset::of(4, {0, 2})));
    CHECK(!Bitset::of(4, {0, 2}).lex_less(Bitset::of(4, {0, 1})));
    // {0} vs {0,3}: differ at 3, the containing side comes first
    CHECK(Bitset::of(4, {0, 3}).lex_less(Bitset::of(4, {0})));
    CHECK(!Bitset::of(4, {0}).lex_less(Bitset::of(4, {0, 3})));
    CHECK(!Bitset::of(4, {1}).lex_less(Bitset::of(4, {0, 3})));
    CHECK(!Bitset::of(4, {2}).lex_less(Bitset::of(4, {2})));
}

TEST_CASE("graph construction and validation") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate collapses
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 1);
    CHECK(g.max_degree() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
    CHECK_THROWS_AS(Graph(-1), InputError);
    CHECK_THROWS_AS(Graph(Graph::kMaxVertices + 1), InputError);

    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    Graph h = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("connectivity and components") {
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(!g.is_connected());
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].to_vector() == std::vector<int>{0, 1, 2});
    CHECK(comps[1].to_vector() == std::vector<int>{3, 4});
    CHECK(path_graph(6).is_connected());
    CHECK(Graph(0).is_connected());
    CHECK(Graph(1).is_connected());
    CHECK(!Graph(2).is_connected());
}

TEST_CASE("induced subgraph keeps labels straight") {
    Graph c5 = cycle_graph(5);
    auto ind = c5.induced_subgraph(Bitset::of(5, {0, 1, 2, 4}));
    CHECK(ind.to_original == std::vector<int>{0, 1, 2, 4});
    CHECK(ind.graph.vertex_count() == 4);
    // edges 0-1, 1-2, 0-4 survive as 0-1, 1-2, 0-3
    CHECK(ind.graph.has_edge(0, 1));
    CHECK(ind.graph.has_edge(1, 2));
    CHECK(ind.graph.has_edge(0, 3));
    CHECK(ind.graph.edge_count() == 3);
    CHECK_THROWS_AS(c5.induced_subgraph(Bitset::of(4, {0})), InputError);
}

TEST_CASE("named families") {
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(cycle_graph(7).degree(0) == 2);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK_THROWS_AS(path_graph(0), InputError);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK_THROWS_AS(complete_graph(0), InputError);
}

TEST_CASE("strong product degrees multiply") {
    // deg(u,a) + 1 = (deg u + 1)(deg a + 1)
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = gnp(5, 0.5, rng);
        Graph h = gnp(4, 0.5, rng);
        Graph p = strong_product(g, h);
        REQUIRE(p.vertex_count() == 20);
        for (int u = 0; u < 5; ++u)
            for (int a = 0; a < 4; ++a)
                CHECK(p.degree(u * 4 + a) + 1 == (g.degree(u) + 1) * (h.degree(a) + 1));
    }
}

TEST_CASE("strong product adjacency rule") {
    Graph p = strong_product(cycle_graph(5), complete_graph(3));
    CHECK(p.vertex_count() == 15);
    CHECK(p.max_degree() == 8);
    for (int v = 0; v < 15; ++v) CHECK(p.degree(v) == 8);
    // same copy: (0,0)-(0,1); consecutive copies all pairs; distant copies none
    CHECK(p.has_edge(0, 1));
    CHECK(p.has_edge(0, 3));
    CHECK(p.has_edge(0, 5));
    CHECK(!p.has_edge(0, 6));
    CHECK(!p.has_edge(2, 8));
    CHECK_THROWS_AS(strong_product(complete_graph(100), complete_graph(100)), InputError);
}

TEST_CASE("clique and stable set predicates") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(is_clique(g, Bitset::of(4, {0, 1, 2})));
    CHECK(is_clique(g, Bitset::of(4, {})));
    CHECK(!is_clique(g, Bitset::of(4, {0, 3})));
    CHECK(is_stable_set(g, Bitset::of(4, {0, 3})));
    CHECK(is_stable_set(g, Bitset::of(4, {})));
    CHECK(!is_stable_set(g, Bitset::of(4, {0, 1})));
}

TEST_CASE("gnp is deterministic for a fixed seed") {
    std::mt19937_64 a(42), b(42);
    Graph g1 = gnp(12, 0.37, a);
    Graph g2 = gnp(12, 0.37, b);
    CHECK(g1 == g2);
    std::mt19937_64 c(43);
    CHECK(!(gnp(12, 0.37, c) == g1));
    std::mt19937_64 d(1);
    CHECK(gnp(6, 0.0, d).edge_count() == 0);
    CHECK(gnp(6, 1.0, d).edge_count() == 15);
    CHECK_THROWS_AS(gnp(3, 1.5, d), InputError);
    CHECK(random_connected_gnp(8, 0.6, d).is_connected());
    CHECK_THROWS_AS(random_connected_gnp(30, 0.01, d, 3), LimitError);
}
