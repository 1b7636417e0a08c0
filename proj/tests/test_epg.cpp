#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pcaepg/epg.hpp"
#include "pcaepg/named_graphs.hpp"
#include "pcaepg/svg.hpp"

using namespace pcaepg;

namespace {

LatticePath hpath(int row, int c0, int c1) {
    std::vector<GridPoint> pts;
    for (int c = c0; c <= c1; ++c) pts.push_back({row, c});
    return LatticePath(std::move(pts));
}

}  // namespace

TEST_CASE("path validation") {
    CHECK_THROWS_AS(LatticePath({{0, 0}}), RepresentationError);                 // trivial
    CHECK_THROWS_AS(LatticePath({{0, 0}, {0, 2}}), RepresentationError);         // jump
    CHECK_THROWS_AS(LatticePath({{0, 0}, {1, 1}}), RepresentationError);         // diagonal
    CHECK_THROWS_AS(LatticePath({{0, 0}, {0, 1}, {0, 0}}), RepresentationError); // repeat
    CHECK_NOTHROW(LatticePath({{0, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("bends") {
    CHECK(hpath(0, 0, 2).bends() == 0);
    // L-shape: 2 right then 2 up
    LatticePath l({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}});
    CHECK(l.bends() == 1);
    // staircase right-up-right
    LatticePath s({{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(s.bends() == 2);
    // bends <= len - 2
    CHECK(s.bends() <= static_cast<int>(s.points().size()) - 2);
}

TEST_CASE("intersection graph: edges vs grid points") {
    // two horizontal paths overlapping in one unit edge
    EpgRepresentation overlap({hpath(0, 0, 2), hpath(0, 2, 4)});
    CHECK_FALSE(intersection_graph(overlap).adjacent(0, 1));  // share only point (0,2)
    EpgRepresentation overlap2({hpath(0, 0, 2), hpath(0, 1, 3)});
    CHECK(intersection_graph(overlap2).adjacent(0, 1));

    // crossing at a single grid point is not adjacency
    LatticePath vert({{-1, 1}, {0, 1}, {1, 1}});
    EpgRepresentation cross({hpath(0, 0, 2), vert});
    Graph cg = intersection_graph(cross);
    CHECK(cg.edge_count() == 0);
}

TEST_CASE("true pie plus a row path is the 4-wheel") {
    auto l = [](std::vector<GridPoint> pts) { return LatticePath(std::move(pts)); };
    // four corner paths around (0,0), consecutive ones sharing an arm
    LatticePath pa = l({{0, -2}, {0, -1}, {0, 0}, {1, 0}, {2, 0}});   // left+up
    LatticePath pb = l({{2, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 2}});     // up+right
    LatticePath pc = l({{0, 2}, {0, 1}, {0, 0}, {-1, 0}, {-2, 0}});   // right+down
    LatticePath pd = l({{-2, 0}, {-1, 0}, {0, 0}, {0, -1}, {0, -2}}); // down+left
    LatticePath pe = l({{0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 2}});   // center: whole row
    EpgRepresentation rep({pa, pb, pc, pd, pe});
    Graph g = intersection_graph(rep);
    // rim cycle a-b-c-d plus center e adjacent to all
    Graph w4 = named_graph({NamedFamily::Tag::wheel, 4, false});
    // vertex order: rim a,b,c,d = 0..3, center 4
    CHECK(g == w4);
}

TEST_CASE("validate_representation") {
    Graph k2 = Graph(2, {{0, 1}});
    EpgRepresentation good({hpath(0, 0, 2), hpath(0, 1, 3)});
    CHECK(validate_representation(good, k2, 1).ok);
    CHECK(validate_representation(good, k2, 0).ok);  // 0 bends

    // crossing-only paths miss the edge
    LatticePath vert({{-1, 1}, {0, 1}, {1, 1}});
    EpgRepresentation bad({hpath(0, 0, 2), vert});
    ValidationReport r = validate_representation(bad, k2, 1);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.graph_match);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(*r.first_mismatch == std::pair<int, int>{0, 1});
    CHECK(r.mismatch_is_missing);

    // bend budget violation
    LatticePath l({{0, 0}, {0, 1}, {1, 1}});
    EpgRepresentation bent({l, hpath(0, 0, 1)});
    Graph g2 = intersection_graph(bent);
    CHECK(validate_representation(bent, g2, 1).ok);
    CHECK_FALSE(validate_representation(bent, g2, 0).ok);
    CHECK(validate_representation(bent, g2, -1).ok);  // unlimited

    CHECK_THROWS_AS(validate_representation(good, Graph(3, {}), 1), RepresentationError);
}

TEST_CASE("is_epr") {
    // 4 corner-hugging L paths on a rectangle 0..2 x 0..2
    auto l = [](std::vector<GridPoint> pts) { return LatticePath(std::move(pts)); };
    EpgRepresentation corners({
        l({{0, 1}, {0, 0}, {1, 0}}),
        l({{1, 0}, {2, 0}, {2, 1}}),
        l({{2, 1}, {2, 2}, {1, 2}}),
        l({{1, 2}, {0, 2}, {0, 1}}),
    });
    RectangleSpec rect{2, 0, 0, 2};
    CHECK(is_epr(corners, rect));
    // a path through the interior violates it
    EpgRepresentation inner({l({{1, 0}, {1, 1}})});
    CHECK_FALSE(is_epr(inner, rect));
    CHECK_FALSE(RectangleSpec{0, 0, 0, 2}.valid());
}

TEST_CASE("random representations round-trip validate") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<LatticePath> paths;
        for (int v = 0; v < n; ++v) {
            int r = static_cast<int>(rng() % 6), c = static_cast<int>(rng() % 6);
            int kind = static_cast<int>(rng() % 3);
            std::vector<GridPoint> pts;
            if (kind == 0) {
                int len = 1 + static_cast<int>(rng() % 4);
                for (int i = 0; i <= len; ++i) pts.push_back({r, c + i});
            } else if (kind == 1) {
                int len = 1 + static_cast<int>(rng() % 4);
                for (int i = 0; i <= len; ++i) pts.push_back({r + i, c});
            } else {
                int lh = 1 + static_cast<int>(rng() % 3), lv = 1 + static_cast<int>(rng() % 3);
                for (int i = lh; i >= 1; --i) pts.push_back({r, c + i});
                pts.push_back({r, c});
                for (int i = 1; i <= lv; ++i) pts.push_back({r + i, c});
            }
            paths.emplace_back(std::move(pts));
        }
        EpgRepresentation rep(std::move(paths));
        Graph g = intersection_graph(rep);
        CHECK(validate_representation(rep, g, -1).ok);

        // JSON round trip preserves the representation
        EpgRepresentation back = rep_from_json(rep_to_json(rep));
        REQUIRE(back.size() == rep.size());
        for (int v = 0; v < rep.size(); ++v) CHECK(back.path(v).points() == rep.path(v).points());
    }
}

TEST_CASE("json parse errors") {
    CHECK_THROWS(rep_from_json("{}"));
    CHECK_THROWS(rep_from_json(R"({"n": 2, "paths": [[[0,0],[0,1]]]})"));
    CHECK_THROWS(rep_from_json(R"({"n": 1, "paths": [[[0,0]]]})"));  // trivial path
}

TEST_CASE("svg renderer emits well-formed output") {
    EpgRepresentation rep({hpath(0, 0, 2), hpath(1, 0, 2)});
    std::string svg = render_svg(rep);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}
