#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "pcaepg/arcs.hpp"
#include "pcaepg/epg.hpp"
#include "pcaepg/graph.hpp"

namespace pcaepg {

struct SearchBudget {
    int grid_rows = 6;   // grid points per column
    int grid_cols = 6;   // grid points per row
    std::int64_t node_limit = 4'000'000'000LL;
};

enum class SearchStatus {
    found,      // representation found
    exhausted,  // search space exhausted, none exists within this grid
    capped,     // node limit hit: inconclusive, NOT a refutation
};

struct EpgSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<EpgRepresentation> rep;
    std::int64_t nodes = 0;
};

// Exhaustive backtracking over <=1-bend paths on a bounded grid.  Vertex 0 is
// placed first and restricted to canonical shapes under the grid's symmetry
// group; deterministic first-found result.
EpgSearchResult search_b1_epg(const Graph& g, const SearchBudget& budget);

struct ArcFlags {
    bool proper = false;
    bool normal = false;   // no two arcs cover the circle
    bool helly3 = false;   // no three arcs cover the circle
};

// Exhaustive endpoint-order search (n <= 8): arc 0's start pinned at position
// 0; returns the first model whose intersection graph equals g, satisfying
// the requested flags and the accept predicate.
std::optional<ArcRepresentation> search_arc_representation(
    const Graph& g, ArcFlags flags,
    const std::function<bool(const ArcRepresentation&)>& accept);
std::optional<ArcRepresentation> search_arc_representation(const Graph& g, ArcFlags flags);

struct CrossValidateReport {
    int checked = 0;        // connected PCA graphs examined
    int agreements = 0;
    int disagreements = 0;  // must stay 0
    int inconclusive = 0;   // oracle budget cap hits
    std::vector<std::string> lines;  // "<graph6> <verdict> <oracle> <status>"
    std::string to_text() const;
};

// Enumerates all connected graphs up to max_n vertices (max_n <= 7); for each
// PCA graph compares the Theorem-3 verdict with the bounded oracle search.
CrossValidateReport cross_validate(int max_n, const SearchBudget& budget);

}  // namespace pcaepg
