#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcaepg/graph.hpp"

namespace pcaepg {

struct RepresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridPoint {
    int row = 0;
    int col = 0;
    auto operator<=>(const GridPoint&) const = default;
};

// Unit grid edge, endpoints normalized so a < b.
struct GridEdge {
    GridPoint a, b;
    GridEdge(GridPoint p, GridPoint q) : a(std::min(p, q)), b(std::max(p, q)) {}
    auto operator<=>(const GridEdge&) const = default;
};

// Simple lattice path: >= 2 points, consecutive points one unit step apart,
// no repeated grid point (hence no repeated grid edge).
class LatticePath {
public:
    explicit LatticePath(std::vector<GridPoint> points);

    const std::vector<GridPoint>& points() const { return pts_; }
    int bends() const;
    std::vector<GridEdge> grid_edges() const;

private:
    std::vector<GridPoint> pts_;
};

int bends(const LatticePath& p);

// One path per vertex of the represented graph (vertex i -> paths()[i]).
class EpgRepresentation {
public:
    explicit EpgRepresentation(std::vector<LatticePath> paths);

    int size() const { return static_cast<int>(paths_.size()); }
    const std::vector<LatticePath>& paths() const { return paths_; }
    const LatticePath& path(int v) const { return paths_[v]; }

    // bounding box of all points: {min_row, min_col}, {max_row, max_col}
    std::pair<GridPoint, GridPoint> bounding_box() const;

private:
    std::vector<LatticePath> paths_;
};

// u ~ v iff the paths share at least one unit grid edge (a shared grid point
// alone is not adjacency).
Graph intersection_graph(const EpgRepresentation& rep);

struct ValidationReport {
    bool ok = false;
    bool graph_match = false;
    // first adjacency mismatch, if any; missing = true when the graph has the
    // edge but the paths do not share a grid edge
    std::optional<std::pair<int, int>> first_mismatch;
    bool mismatch_is_missing = false;
    std::vector<int> bend_counts;
    int max_bends = -1;  // -1 = unlimited
    bool bends_ok = false;
    std::string to_string() const;
};

// max_bends < 0 means unlimited.
ValidationReport validate_representation(const EpgRepresentation& rep, const Graph& g, int max_bends);

struct RectangleSpec {
    int top_row;     // > bottom_row
    int bottom_row;
    int left_col;    // < right_col
    int right_col;
    bool valid() const { return top_row > bottom_row && right_col > left_col; }
};

// True iff every grid edge of every path lies on the rectangle's boundary cycle.
bool is_epr(const EpgRepresentation& rep, const RectangleSpec& rect);

// Smallest rectangle containing the representation (degenerate boxes are
// widened by one row/column so the spec stays valid).
RectangleSpec bounding_rectangle(const EpgRepresentation& rep);

// JSON schema: {"n": int, "paths": [[[row,col], ...], ...]} with vertex i at index i.
std::string rep_to_json(const EpgRepresentation& rep);
EpgRepresentation rep_from_json(const std::string& text);

}  // namespace pcaepg
