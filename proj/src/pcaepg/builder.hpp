#pragma once

#include "pcaepg/arcs.hpp"
#include "pcaepg/classify.hpp"
#include "pcaepg/epg.hpp"
#include "pcaepg/partition.hpp"

namespace pcaepg {

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 0-bend layout for interval graphs: consecutive maximal-clique arrangement,
// vertex v spans its clique interval on one row.
EpgRepresentation interval_zero_bend_layout(const Graph& g);

struct EprResult {
    EpgRepresentation rep;
    RectangleSpec rect;
};

// Maps a circular arc model onto a rectangle boundary: picks 4 corner
// cut-points in endpoint gaps so that every arc passes at most one corner,
// then each arc becomes a boundary path with <= 1 bend.  The rectangle's side
// lengths are determined by the cut, so it is returned rather than taken.
EprResult arcs_to_boundary_paths(const ArcRepresentation& arcs);

// True iff a 4-corner placement exists (precondition probe for the above).
bool corner_placement_exists(const ArcRepresentation& arcs);

// 1-bend representation for any connected PCA graph passing the Theorem-3
// filter, by the sufficiency proof's case analysis: interval graphs get the
// 0-bend layout; a graph with an induced 4-wheel goes through the A-set
// partition and one of the three wheel-case templates; otherwise a dominating
// triangle with the Case-2 structure, or the proper Helly route via an arc
// model on the rectangle boundary.
EpgRepresentation build_b1_epg(const Graph& g);

// <= 1-bend rectangle-boundary representation for graphs passing the
// Corollary-2 filter (interval row layout, or arc model mapped to the
// boundary).
EprResult build_b1_epr(const Graph& g);

}  // namespace pcaepg
