#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "naive.hpp"
#include "pcaepg/enumerate.hpp"
#include "pcaepg/named_graphs.hpp"

using namespace pcaepg;

namespace {
NamedFamily fam(NamedFamily::Tag t, int p = 0, bool s = false) { return {t, p, s}; }
using Tag = NamedFamily::Tag;
}  // namespace

TEST_CASE("graph_from_edges basics") {
    Graph k3 = graph_from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == named_graph(fam(Tag::complete, 3)));

    Graph c4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4 == named_graph(fam(Tag::cycle, 4)));

    Graph k1 = graph_from_edges(1, {});
    CHECK(k1.n() == 1);
    CHECK(k1.edge_count() == 0);

    // duplicate edges collapse
    CHECK(graph_from_edges(2, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(graph_from_edges(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(graph_from_edges(2, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(graph_from_edges(0, {}), GraphError);
}

TEST_CASE("complement") {
    CHECK(complement(named_graph(fam(Tag::complete, 4))).edge_count() == 0);
    Graph c5 = named_graph(fam(Tag::cycle, 5));
    CHECK(complement(complement(c5)) == c5);
    CHECK(complement(named_graph(fam(Tag::cycle, 6))).edge_count() == 9);
}

TEST_CASE("complement is an involution on random small graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        EdgeList e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) e.emplace_back(u, v);
        Graph g(n, e);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("disjoint_union") {
    Graph two = disjoint_union(Graph(1, {}), Graph(1, {}));
    CHECK(two.n() == 2);
    CHECK(two.edge_count() == 0);

    Graph c4k1 = disjoint_union(named_graph(fam(Tag::cycle, 4)), Graph(1, {}));
    CHECK(c4k1 == named_graph(fam(Tag::cycle_union_k1, 0)));
    CHECK_FALSE(is_connected(c4k1));

    Graph two_k3 = disjoint_union(named_graph(fam(Tag::complete, 3)),
                                  named_graph(fam(Tag::complete, 3)));
    CHECK(two_k3.n() == 6);
    CHECK(two_k3.edge_count() == 6);
}

TEST_CASE("graph_power") {
    Graph c7 = named_graph(fam(Tag::cycle, 7));
    CHECK(graph_power(c7, 1) == c7);
    CHECK(graph_power(c7, 3) == named_graph(fam(Tag::complete, 7)));

    Graph c7_2 = graph_power(c7, 2);
    CHECK(c7_2.edge_count() == 14);
    for (int v = 0; v < 7; ++v) CHECK(c7_2.degree(v) == 4);
    for (int v = 0; v < 7; ++v) {
        CHECK(c7_2.adjacent(v, (v + 1) % 7));
        CHECK(c7_2.adjacent(v, (v + 2) % 7));
        CHECK_FALSE(c7_2.adjacent(v, (v + 3) % 7));
    }
    CHECK(graph_power(c7, 0).edge_count() == 0);
}

TEST_CASE("graph_power at the diameter is complete") {
    for (const Graph& g : connected_graphs(5))
        CHECK(graph_power(g, diameter(g)) == named_graph(fam(Tag::complete, 5)));
}

TEST_CASE("induced_subgraph") {
    Graph w4 = named_graph(fam(Tag::wheel, 4));  // rim 0..3, center 4
    CHECK(induced_subgraph(w4, {0, 1, 2, 3}) == named_graph(fam(Tag::cycle, 4)));
    CHECK(induced_subgraph(named_graph(fam(Tag::complete, 5)), {1, 3, 4}) ==
          named_graph(fam(Tag::complete, 3)));
    // the 3-sun's clique
    CHECK(induced_subgraph(named_graph(fam(Tag::sun3)), {0, 1, 2}) ==
          named_graph(fam(Tag::complete, 3)));
    CHECK_THROWS_AS(induced_subgraph(w4, {}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(w4, {0, 9}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(w4, {0, 0}), GraphError);
}

TEST_CASE("is_chordal") {
    CHECK_FALSE(is_chordal(named_graph(fam(Tag::cycle, 4))));
    CHECK(is_chordal(named_graph(fam(Tag::complete, 4))));
    CHECK(is_chordal(named_graph(fam(Tag::sun3))));
}

TEST_CASE("is_chordal agrees with naive induced-cycle enumeration") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            CHECK(is_chordal(g) == naive::is_chordal(g));
    // spot-check at 7
    for (const Graph& g : connected_graphs(7))
        if (g.edge_count() % 5 == 0)
            CHECK(is_chordal(g) == naive::is_chordal(g));
}

TEST_CASE("asteroidal triples") {
    CHECK_FALSE(has_asteroidal_triple(named_graph(fam(Tag::claw))));
    CHECK_FALSE(has_asteroidal_triple(named_graph(fam(Tag::path, 4))));
    CHECK(has_asteroidal_triple(named_graph(fam(Tag::cycle, 6))));
    // alternate vertices of C_6 are one
    auto at = find_asteroidal_triple(named_graph(fam(Tag::cycle, 6)));
    REQUIRE(at.size() == 3);
    CHECK(is_independent(named_graph(fam(Tag::cycle, 6)), at));
    // the net: pendants form an asteroidal triple
    CHECK(has_asteroidal_triple(named_graph(fam(Tag::fig1, 6))));
}

TEST_CASE("set predicates") {
    Graph w4 = named_graph(fam(Tag::wheel, 4));
    CHECK(is_clique(w4, {0, 1, 4}));
    CHECK_FALSE(is_clique(w4, {0, 2, 4}));
    CHECK(is_independent(w4, {0, 2}));
    CHECK(is_dominating(w4, {4}));
    CHECK_FALSE(is_dominating(named_graph(fam(Tag::cycle, 6)), {0}));
    Graph s3 = named_graph(fam(Tag::sun3));
    CHECK(is_complete_between(s3, {0, 1}, {2}));
    CHECK(is_anticomplete_between(s3, {3}, {4, 5}));
}

TEST_CASE("maximal cliques of the 3-sun") {
    auto cl = maximal_cliques(named_graph(fam(Tag::sun3)));
    CHECK(cl.size() == 4);  // the central triangle and three ears
}

TEST_CASE("enumeration counts match the unlabeled-graph series") {
    const int all_counts[] = {1, 2, 4, 11, 34, 156};
    const int conn_counts[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(all_graphs(n).size()) == all_counts[n - 1]);
        CHECK(static_cast<int>(connected_graphs(n).size()) == conn_counts[n - 1]);
    }
}
