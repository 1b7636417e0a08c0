#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcaepg/graph.hpp"

namespace pcaepg {

// Open arcs on a discrete circle with circle_size = 2n endpoint positions,
// one endpoint per position.  Arc v runs clockwise from arcs[v].first to
// arcs[v].second, open at both ends; never empty, never the full circle.
struct ArcRepresentation {
    int circle_size = 0;
    std::vector<std::pair<int, int>> arcs;

    int n() const { return static_cast<int>(arcs.size()); }
};

struct ArcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Endpoint sanity: positions in range, all 2n distinct.
void check_arc_representation(const ArcRepresentation& r);

// Strictly-inside test for a circle position against an open arc.
bool position_in_arc(const ArcRepresentation& r, int pos, int arc);

// u ~ v iff the open arcs share a point.
Graph arc_intersection_graph(const ArcRepresentation& r);

bool arcs_proper(const ArcRepresentation& r);   // no arc properly contains another
bool arcs_normal(const ArcRepresentation& r);   // no two arcs cover the circle
bool arcs_helly3(const ArcRepresentation& r);   // no three arcs cover the circle

// Coverage mask over the 4n "cells" of the circle (even cells = endpoint
// points, odd cells = open gaps between consecutive positions).  An arc covers
// exactly the cells strictly between its endpoints; unions of these masks
// decide circle covers exactly.
std::uint64_t arc_cell_mask(const ArcRepresentation& r, int arc);
std::uint64_t full_cell_mask(int circle_size);

}  // namespace pcaepg
