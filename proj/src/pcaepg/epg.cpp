#include "pcaepg/epg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pcaepg {

LatticePath::LatticePath(std::vector<GridPoint> points) : pts_(std::move(points)) {
    if (pts_.size() < 2) throw RepresentationError("path must be nontrivial (>= 2 grid points)");
    std::set<GridPoint> seen;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (!seen.insert(pts_[i]).second) throw RepresentationError("path repeats a grid point");
        if (i > 0) {
            int dr = pts_[i].row - pts_[i - 1].row;
            int dc = pts_[i].col - pts_[i - 1].col;
            if (std::abs(dr) + std::abs(dc) != 1)
                throw RepresentationError("consecutive path points must differ by one unit step");
        }
    }
}

int LatticePath::bends() const {
    int b = 0;
    for (std::size_t i = 2; i < pts_.size(); ++i) {
        int dr1 = pts_[i - 1].row - pts_[i - 2].row;
        int dc1 = pts_[i - 1].col - pts_[i - 2].col;
        int dr2 = pts_[i].row - pts_[i - 1].row;
        int dc2 = pts_[i].col - pts_[i - 1].col;
        if (dr1 != dr2 || dc1 != dc2) ++b;
    }
    return b;
}

int bends(const LatticePath& p) { return p.bends(); }

std::vector<GridEdge> LatticePath::grid_edges() const {
    std::vector<GridEdge> out;
    out.reserve(pts_.size() - 1);
    for (std::size_t i = 1; i < pts_.size(); ++i) out.emplace_back(pts_[i - 1], pts_[i]);
    return out;
}

EpgRepresentation::EpgRepresentation(std::vector<LatticePath> paths) : paths_(std::move(paths)) {
    if (paths_.empty()) throw RepresentationError("representation needs at least one path");
}

std::pair<GridPoint, GridPoint> EpgRepresentation::bounding_box() const {
    GridPoint lo = paths_[0].points()[0];
    GridPoint hi = lo;
    for (const auto& p : paths_)
        for (const auto& pt : p.points()) {
            lo.row = std::min(lo.row, pt.row);
            lo.col = std::min(lo.col, pt.col);
            hi.row = std::max(hi.row, pt.row);
            hi.col = std::max(hi.col, pt.col);
        }
    return {lo, hi};
}

Graph intersection_graph(const EpgRepresentation& rep) {
    int n = rep.size();
    std::map<GridEdge, std::vector<int>> owners;
    for (int v = 0; v < n; ++v)
        for (const GridEdge& e : rep.path(v).grid_edges()) owners[e].push_back(v);
    EdgeList edges;
    for (const auto& [e, vs] : owners)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
    return Graph(n, edges);
}

ValidationReport validate_representation(const EpgRepresentation& rep, const Graph& g, int max_bends) {
    if (rep.size() != g.n())
        throw RepresentationError("path count (" + std::to_string(rep.size()) +
                                  ") does not match vertex count (" + std::to_string(g.n()) + ")");
    ValidationReport r;
    r.max_bends = max_bends;
    Graph actual = intersection_graph(rep);
    r.graph_match = true;
    for (int u = 0; u < g.n() && r.graph_match; ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (actual.adjacent(u, v) != g.adjacent(u, v)) {
                r.graph_match = false;
                r.first_mismatch = {u, v};
                r.mismatch_is_missing = g.adjacent(u, v);
                break;
            }
    r.bends_ok = true;
    for (int v = 0; v < rep.size(); ++v) {
        int b = rep.path(v).bends();
        r.bend_counts.push_back(b);
        if (max_bends >= 0 && b > max_bends) r.bends_ok = false;
    }
    r.ok = r.graph_match && r.bends_ok;
    return r;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    os << "intersection graph: " << (graph_match ? "match" : "MISMATCH");
    if (first_mismatch)
        os << " (" << (mismatch_is_missing ? "missing" : "spurious") << " edge ("
           << first_mismatch->first << "," << first_mismatch->second << "))";
    os << "\nbends:";
    for (int b : bend_counts) os << ' ' << b;
    if (max_bends >= 0)
        os << "\nbend budget " << max_bends << ": " << (bends_ok ? "ok" : "EXCEEDED");
    os << "\nresult: " << (ok ? "pass" : "fail");
    return os.str();
}

bool is_epr(const EpgRepresentation& rep, const RectangleSpec& rect) {
    if (!rect.valid()) return false;
    auto on_boundary = [&](const GridEdge& e) {
        bool horizontal = e.a.row == e.b.row;
        if (horizontal) {
            if (e.a.row != rect.top_row && e.a.row != rect.bottom_row) return false;
            return e.a.col >= rect.left_col && e.b.col <= rect.right_col;
        }
        if (e.a.col != rect.left_col && e.a.col != rect.right_col) return false;
        return e.a.row >= rect.bottom_row && e.b.row <= rect.top_row;
    };
    for (const auto& p : rep.paths())
        for (const GridEdge& e : p.grid_edges())
            if (!on_boundary(e)) return false;
    return true;
}

RectangleSpec bounding_rectangle(const EpgRepresentation& rep) {
    auto [lo, hi] = rep.bounding_box();
    RectangleSpec r{hi.row, lo.row, lo.col, hi.col};
    if (r.top_row == r.bottom_row) ++r.top_row;
    if (r.left_col == r.right_col) ++r.right_col;
    return r;
}

std::string rep_to_json(const EpgRepresentation& rep) {
    nlohmann::json j;
    j["n"] = rep.size();
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : rep.paths()) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& pt : p.points()) pts.push_back({pt.row, pt.col});
        paths.push_back(pts);
    }
    j["paths"] = paths;
    return j.dump(2);
}

EpgRepresentation rep_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("paths"))
        throw RepresentationError("representation JSON needs \"n\" and \"paths\"");
    int n = j["n"].get<int>();
    if (!j["paths"].is_array() || static_cast<int>(j["paths"].size()) != n)
        throw RepresentationError("representation JSON: paths array must have n entries");
    std::vector<LatticePath> paths;
    for (const auto& pj : j["paths"]) {
        std::vector<GridPoint> pts;
        for (const auto& ptj : pj) {
            if (!ptj.is_array() || ptj.size() != 2)
                throw RepresentationError("representation JSON: points must be [row,col]");
            pts.push_back({ptj[0].get<int>(), ptj[1].get<int>()});
        }
        paths.emplace_back(std::move(pts));
    }
    return EpgRepresentation(std::move(paths));
}

}  // namespace pcaepg
