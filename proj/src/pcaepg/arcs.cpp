#include "pcaepg/arcs.hpp"

#include <algorithm>

namespace pcaepg {

void check_arc_representation(const ArcRepresentation& r) {
    if (r.circle_size != 2 * r.n())
        throw ArcError("circle_size must be 2n");
    std::vector<char> used(r.circle_size, 0);
    for (auto [s, e] : r.arcs) {
        for (int p : {s, e}) {
            if (p < 0 || p >= r.circle_size) throw ArcError("arc endpoint out of range");
            if (used[p]) throw ArcError("arc endpoints must occupy distinct positions");
            used[p] = 1;
        }
    }
}

bool position_in_arc(const ArcRepresentation& r, int pos, int arc) {
    auto [s, e] = r.arcs[arc];
    int m = r.circle_size;
    int d1 = ((pos - s) % m + m) % m;
    int d2 = ((e - s) % m + m) % m;
    return 0 < d1 && d1 < d2;
}

Graph arc_intersection_graph(const ArcRepresentation& r) {
    EdgeList edges;
    for (int u = 0; u < r.n(); ++u)
        for (int v = u + 1; v < r.n(); ++v)
            if (position_in_arc(r, r.arcs[v].first, u) || position_in_arc(r, r.arcs[u].first, v))
                edges.emplace_back(u, v);
    return Graph(r.n(), edges);
}

std::uint64_t arc_cell_mask(const ArcRepresentation& r, int arc) {
    auto [s, e] = r.arcs[arc];
    int cells = 2 * r.circle_size;
    std::uint64_t mask = 0;
    for (int c = (2 * s + 1) % cells; c != 2 * e; c = (c + 1) % cells)
        mask |= std::uint64_t{1} << c;
    return mask;
}

std::uint64_t full_cell_mask(int circle_size) {
    int cells = 2 * circle_size;
    return (cells == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << cells) - 1);
}

bool arcs_proper(const ArcRepresentation& r) {
    std::vector<std::uint64_t> masks(r.n());
    for (int v = 0; v < r.n(); ++v) masks[v] = arc_cell_mask(r, v);
    for (int u = 0; u < r.n(); ++u)
        for (int v = 0; v < r.n(); ++v)
            if (u != v && (masks[u] & ~masks[v]) == 0) return false;
    return true;
}

bool arcs_normal(const ArcRepresentation& r) {
    std::uint64_t full = full_cell_mask(r.circle_size);
    for (int u = 0; u < r.n(); ++u)
        for (int v = u + 1; v < r.n(); ++v)
            if ((arc_cell_mask(r, u) | arc_cell_mask(r, v)) == full) return false;
    return true;
}

bool arcs_helly3(const ArcRepresentation& r) {
    std::uint64_t full = full_cell_mask(r.circle_size);
    std::vector<std::uint64_t> masks(r.n());
    for (int v = 0; v < r.n(); ++v) masks[v] = arc_cell_mask(r, v);
    for (int u = 0; u < r.n(); ++u)
        for (int v = u + 1; v < r.n(); ++v)
            for (int w = v + 1; w < r.n(); ++w)
                if ((masks[u] | masks[v] | masks[w]) == full) return false;
    return true;
}

}  // namespace pcaepg
