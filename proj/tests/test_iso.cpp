#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "naive.hpp"
#include "pcaepg/classify.hpp"
#include "pcaepg/enumerate.hpp"
#include "pcaepg/iso.hpp"

using namespace pcaepg;

namespace {
using Tag = NamedFamily::Tag;
NamedFamily fam(Tag t, int p = 0, bool s = false) { return {t, p, s}; }
}  // namespace

TEST_CASE("find_induced basics") {
    Graph w4 = named_graph(fam(Tag::wheel, 4));
    Graph c4 = named_graph(fam(Tag::cycle, 4));
    auto rim = find_induced(w4, c4);
    REQUIRE(rim.has_value());
    CHECK(embedding_valid(w4, c4, *rim));

    CHECK_FALSE(find_induced(named_graph(fam(Tag::complete, 4)), c4).has_value());

    // H_1 contains an induced 4-wheel
    CHECK(find_induced(named_graph(fam(Tag::fig2, 1)), w4).has_value());
}

TEST_CASE("identity embedding on self") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto e = find_induced(g, g);
            REQUIRE(e.has_value());
            // lexicographically least self-embedding is the identity
            for (int v = 0; v < g.n(); ++v) CHECK((*e)[v] == v);
        }
}

TEST_CASE("agreement with the all-injective-maps enumerator") {
    std::vector<Graph> patterns;
    for (auto f : {fam(Tag::claw), fam(Tag::cycle, 4), fam(Tag::cycle, 5),
                   fam(Tag::complete, 3), fam(Tag::path, 4), fam(Tag::wheel, 4)})
        patterns.push_back(named_graph(f));
    for (int n = 4; n <= 7; ++n) {
        int stride = (n == 7) ? 17 : 1;  // sample the 7-vertex hosts
        auto hosts = connected_graphs(n);
        for (std::size_t i = 0; i < hosts.size(); i += stride)
            for (const Graph& p : patterns) {
                auto mine = find_induced(hosts[i], p);
                auto ref = naive::find_induced(hosts[i], p);
                CHECK(mine.has_value() == ref.has_value());
                if (mine) CHECK(embedding_valid(hosts[i], p, *mine));
            }
    }
}

TEST_CASE("embedding_valid rejects bad maps") {
    Graph w4 = named_graph(fam(Tag::wheel, 4));
    Graph c4 = named_graph(fam(Tag::cycle, 4));
    CHECK_FALSE(embedding_valid(w4, c4, {0, 1, 2, 2}));   // not injective
    CHECK_FALSE(embedding_valid(w4, c4, {0, 1, 2}));      // wrong size
    CHECK_FALSE(embedding_valid(w4, c4, {0, 1, 4, 3}));   // 4 is the hub: adjacency wrong
}

TEST_CASE("first_forbidden scan order and truncation") {
    // C_7^2 is hit as the power-cycle member with the identity embedding
    Graph c72 = named_graph(fam(Tag::power_cycle, 2));
    auto hit = first_forbidden(c72, theorem3_family(c72.n()));
    REQUIRE(hit.has_value());
    CHECK(hit->family.tag == Tag::power_cycle);
    CHECK(hit->family.param == 2);
    for (int v = 0; v < 7; ++v) CHECK(hit->embedding[v] == v);

    // C_5: every Theorem-3 pattern has >= 6 vertices
    CHECK_FALSE(first_forbidden(named_graph(fam(Tag::cycle, 5)),
                                theorem3_family(5)).has_value());

    // claw host: too small for every Theorem-2 pattern except itself
    Graph claw = named_graph(fam(Tag::claw));
    auto claw_hit = first_forbidden(claw, theorem2_family(claw.n()));
    REQUIRE(claw_hit.has_value());
    CHECK(claw_hit->family.tag == Tag::co_odd_cycle_union_k1);
    CHECK(claw_hit->family.param == 0);
}

TEST_CASE("returned embeddings re-validate") {
    for (const Graph& g : connected_graphs(6)) {
        auto hit = first_forbidden(g, theorem2_family(g.n()));
        if (hit) CHECK(embedding_valid(g, named_graph(hit->family), hit->embedding));
    }
}
