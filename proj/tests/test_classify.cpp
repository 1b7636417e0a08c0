#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcaepg/classify.hpp"
#include "pcaepg/enumerate.hpp"

using namespace pcaepg;

namespace {
using Tag = NamedFamily::Tag;
NamedFamily fam(Tag t, int p = 0, bool s = false) { return {t, p, s}; }
}  // namespace

TEST_CASE("is_pca on named graphs") {
    // every H_i is a PCA graph
    for (int i = 1; i <= 8; ++i) {
        CHECK_MESSAGE(is_pca(named_graph(fam(Tag::fig2, i))).yes, "H_", i);
    }
    CHECK(is_pca(named_graph(fam(Tag::fig2, 5, true))).yes);

    // connected members of the forbidden family are not
    for (int i = 2; i <= 6; ++i) {
        Verdict v = is_pca(named_graph(fam(Tag::fig1, i)));
        CHECK_FALSE(v.yes);
        REQUIRE(v.forbidden.has_value());
        CHECK(v.forbidden->family.tag == Tag::fig1);
        CHECK(v.forbidden->family.param == i);
    }

    CHECK(is_pca(named_graph(fam(Tag::cycle, 8))).yes);
    CHECK_FALSE(is_pca(named_graph(fam(Tag::claw))).yes);
    CHECK_FALSE(is_pca(named_graph(fam(Tag::wheel, 5))).yes);

    CHECK_THROWS_AS(is_pca(named_graph(fam(Tag::cycle_union_k1, 0))), DisconnectedGraphError);
}

TEST_CASE("is_interval") {
    CHECK(is_interval(named_graph(fam(Tag::path, 4))).yes);
    Verdict c4 = is_interval(named_graph(fam(Tag::cycle, 4)));
    CHECK_FALSE(c4.yes);
    REQUIRE(c4.forbidden.has_value());
    CHECK(c4.forbidden->family.tag == Tag::cycle);
    CHECK(c4.forbidden->family.param == 4);

    Verdict c72 = is_interval(named_graph(fam(Tag::power_cycle, 2)));
    CHECK_FALSE(c72.yes);
    REQUIRE(c72.forbidden.has_value());
    CHECK(c72.forbidden->family.param == 4);  // contains an induced C_4

    // chordal but asteroidal: the net
    Verdict net = is_interval(named_graph(fam(Tag::fig1, 6)));
    CHECK_FALSE(net.yes);
    CHECK(net.asteroidal_triple.has_value());
}

TEST_CASE("is_phca") {
    CHECK_FALSE(is_phca(named_graph(fam(Tag::wheel, 4))).yes);
    CHECK(is_phca(named_graph(fam(Tag::wheel, 4))).forbidden->family.tag == Tag::wheel);
    CHECK(is_phca(named_graph(fam(Tag::cycle, 5))).yes);
    Verdict s3 = is_phca(named_graph(fam(Tag::sun3)));
    CHECK_FALSE(s3.yes);
    CHECK(s3.forbidden->family.tag == Tag::sun3);
}

TEST_CASE("classify_b1_epg") {
    Verdict h3 = classify_b1_epg(named_graph(fam(Tag::fig2, 3)));
    CHECK_FALSE(h3.yes);
    CHECK(h3.forbidden->family.tag == Tag::fig2);
    CHECK(h3.forbidden->family.param == 3);

    Verdict c72 = classify_b1_epg(named_graph(fam(Tag::power_cycle, 2)));
    CHECK_FALSE(c72.yes);
    CHECK(c72.forbidden->family.tag == Tag::power_cycle);

    CHECK(classify_b1_epg(named_graph(fam(Tag::wheel, 4))).yes);

    // precondition: non-PCA input is an error carrying the PCA certificate
    try {
        classify_b1_epg(named_graph(fam(Tag::wheel, 5)));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        REQUIRE(e.pca_verdict.forbidden.has_value());
        CHECK(e.pca_verdict.forbidden->family.tag == Tag::co_odd_cycle_union_k1);
    }
}

TEST_CASE("classify_b1_epr") {
    CHECK_FALSE(classify_b1_epr(named_graph(fam(Tag::wheel, 4))).yes);
    CHECK_FALSE(classify_b1_epr(named_graph(fam(Tag::sun3))).yes);
    CHECK(classify_b1_epr(named_graph(fam(Tag::cycle, 4))).yes);
    CHECK_FALSE(classify_b1_epr(named_graph(fam(Tag::power_cycle, 2))).yes);
}

TEST_CASE("B1-EPR implies B1-EPG on all small PCA graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (!is_pca(g).yes) continue;
            if (classify_b1_epr(g).yes) CHECK(classify_b1_epg(g).yes);
        }
}

TEST_CASE("claw-containing graphs always fail the PCA scan") {
    // the claw is co-(C_3 u K_1), the n = 0 member of the co-odd family
    Graph claw = named_graph(fam(Tag::claw));
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            if (find_induced(g, claw).has_value()) CHECK_FALSE(is_pca(g).yes);
}

TEST_CASE("H_i minimality within the scan: deleting any vertex clears the verdict") {
    for (int i = 1; i <= 8; ++i)
        for (bool serp : {false, true}) {
            if (serp && i != 5) continue;
            Graph h = named_graph(fam(Tag::fig2, i, serp));
            for (int v = 0; v < h.n(); ++v) {
                std::vector<int> keep;
                for (int u = 0; u < h.n(); ++u)
                    if (u != v) keep.push_back(u);
                Graph sub = induced_subgraph(h, keep);
                if (!is_connected(sub)) continue;
                if (!is_pca(sub).yes) continue;
                CHECK_MESSAGE(classify_b1_epg(sub).yes, "H_", i, " minus ", v);
            }
        }
}

TEST_CASE("verdict class tags") {
    CHECK(class_tag_name(ClassTag::b1epg) == "B1EPG");
    CHECK(is_pca(Graph(1, {})).yes);  // K_1 is PCA
}
