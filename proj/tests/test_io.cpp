#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "pcaepg/enumerate.hpp"
#include "pcaepg/graph_io.hpp"
#include "pcaepg/named_graphs.hpp"

using namespace pcaepg;

TEST_CASE("adjacency text round trip") {
    Graph g = named_graph({NamedFamily::Tag::fig2, 3, false});
    std::ostringstream os;
    write_adjacency(os, g);
    std::istringstream is(os.str());
    CHECK(read_adjacency(is) == g);
}

TEST_CASE("adjacency parse errors") {
    std::istringstream bad1("not a graph");
    CHECK_THROWS_AS(read_adjacency(bad1), FormatError);
    std::istringstream bad2("3 2\n0 1\n");
    CHECK_THROWS_AS(read_adjacency(bad2), FormatError);
    std::istringstream bad3("2 1\n0 5\n");
    CHECK_THROWS_AS(read_adjacency(bad3), FormatError);
}

TEST_CASE("graph6 known encodings") {
    // standard examples: K_1 = "@", P_4 with edges 01,12,23
    CHECK(encode_graph6(Graph(1, {})) == "@");
    CHECK(decode_graph6("@") == Graph(1, {}));
    // C_5 round trip and a known small string: K_4 on 4 vertices = "C~"
    CHECK(encode_graph6(named_graph({NamedFamily::Tag::complete, 4, false})) == "C~");
    CHECK(decode_graph6("C~") == named_graph({NamedFamily::Tag::complete, 4, false}));
}

TEST_CASE("graph6 round trip is the identity on random graphs") {
    std::mt19937 rng(998877);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        EdgeList e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) e.emplace_back(u, v);
        Graph g(n, e);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 header and errors") {
    CHECK(decode_graph6(">>graph6<<C~") == named_graph({NamedFamily::Tag::complete, 4, false}));
    CHECK_THROWS_AS(decode_graph6(""), FormatError);
    CHECK_THROWS_AS(decode_graph6("C"), FormatError);  // truncated
    CHECK_THROWS_AS(decode_graph6(std::string(1, static_cast<char>(20))), FormatError);
}

TEST_CASE("read_graph dispatch") {
    std::istringstream adj("3 3\n0 1\n1 2\n2 0\n");
    CHECK(read_graph(adj, "adj") == named_graph({NamedFamily::Tag::complete, 3, false}));
    std::istringstream g6("Bw\n");
    CHECK(read_graph(g6, "graph6") == named_graph({NamedFamily::Tag::complete, 3, false}));
    std::istringstream x("1 0\n");
    CHECK_THROWS_AS(read_graph(x, "weird"), FormatError);
}
