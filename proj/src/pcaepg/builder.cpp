#include "pcaepg/builder.hpp"

#include <algorithm>
#include <map>

#include "pcaepg/oracle.hpp"

namespace pcaepg {

// ------------------------------------------------------------ path helpers

namespace {

enum class Dir { up, down, left, right };

GridPoint step(GridPoint p, Dir d, int k) {
    switch (d) {
        case Dir::up: return {p.row + k, p.col};
        case Dir::down: return {p.row - k, p.col};
        case Dir::left: return {p.row, p.col - k};
        case Dir::right: return {p.row, p.col + k};
    }
    return p;
}

// L-path: end of arm1 -> corner -> end of arm2
LatticePath lpath(GridPoint corner, Dir d1, int len1, Dir d2, int len2) {
    std::vector<GridPoint> pts;
    for (int i = len1; i >= 1; --i) pts.push_back(step(corner, d1, i));
    pts.push_back(corner);
    for (int i = 1; i <= len2; ++i) pts.push_back(step(corner, d2, i));
    return LatticePath(std::move(pts));
}

LatticePath hseg(int row, int c0, int c1) {
    std::vector<GridPoint> pts;
    for (int c = c0; c <= c1; ++c) pts.push_back({row, c});
    return LatticePath(std::move(pts));
}

LatticePath vseg(int col, int r0, int r1) {
    std::vector<GridPoint> pts;
    for (int r = r0; r <= r1; ++r) pts.push_back({r, col});
    return LatticePath(std::move(pts));
}

struct PathsOut {
    std::vector<std::optional<LatticePath>> slot;
    explicit PathsOut(int n) : slot(n) {}
    void set(int v, LatticePath p) {
        if (slot[v]) throw BuildError("layout assigned vertex " + std::to_string(v) + " twice");
        slot[v] = std::move(p);
    }
    EpgRepresentation finish() {
        std::vector<LatticePath> paths;
        for (std::size_t v = 0; v < slot.size(); ++v) {
            if (!slot[v]) throw BuildError("layout left vertex " + std::to_string(v) + " unassigned");
            paths.push_back(*slot[v]);
        }
        return EpgRepresentation(std::move(paths));
    }
};

}  // namespace

// ------------------------------------------------------------ interval case

namespace {

// Backtracking over clique orderings with the open/closed consecutive check.
bool order_cliques(const std::vector<std::vector<int>>& cliques, int n,
                   std::vector<int>& order, std::vector<char>& used,
                   std::vector<int>& state /* 0 unseen, 1 open, 2 closed */) {
    if (order.size() == cliques.size()) return true;
    for (std::size_t q = 0; q < cliques.size(); ++q) {
        if (used[q]) continue;
        bool ok = true;
        for (int v : cliques[q])
            if (state[v] == 2) { ok = false; break; }
        if (!ok) continue;
        std::vector<int> touched, closed;
        for (int v : cliques[q])
            if (state[v] == 0) { state[v] = 1; touched.push_back(v); }
        for (int v = 0; v < n; ++v)
            if (state[v] == 1 &&
                std::find(cliques[q].begin(), cliques[q].end(), v) == cliques[q].end()) {
                state[v] = 2;
                closed.push_back(v);
            }
        used[q] = 1;
        order.push_back(static_cast<int>(q));
        if (order_cliques(cliques, n, order, used, state)) return true;
        order.pop_back();
        used[q] = 0;
        for (int v : touched) state[v] = 0;
        for (int v : closed) state[v] = 1;
    }
    return false;
}

}  // namespace

EpgRepresentation interval_zero_bend_layout(const Graph& g) {
    auto cliques = maximal_cliques(g);
    std::vector<int> order;
    std::vector<char> used(cliques.size(), 0);
    std::vector<int> state(g.n(), 0);
    if (!order_cliques(cliques, g.n(), order, used, state))
        throw BuildError("no consecutive clique arrangement; input is not an interval graph");
    std::vector<int> first(g.n(), -1), last(g.n(), -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        for (int v : cliques[order[pos]]) {
            if (first[v] < 0) first[v] = static_cast<int>(pos);
            last[v] = static_cast<int>(pos);
        }
    PathsOut out(g.n());
    for (int v = 0; v < g.n(); ++v) out.set(v, hseg(0, first[v], last[v] + 1));
    return out.finish();
}

// ----------------------------------------------------- arc -> boundary paths

namespace {

// gap i of the circle = open segment between positions i and i+1 (mod 2n);
// arc (s, e) covers gaps s .. e-1 (mod 2n)
bool arc_covers_gap(const ArcRepresentation& r, int arc, int gap) {
    auto [s, e] = r.arcs[arc];
    int m = r.circle_size;
    int span = ((e - s) % m + m) % m;
    int off = ((gap - s) % m + m) % m;
    return off < span;
}

std::optional<std::array<int, 4>> find_corner_gaps(const ArcRepresentation& r) {
    int m = r.circle_size;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int d = c + 1; d < m; ++d) {
                    bool ok = true;
                    for (int v = 0; v < r.n() && ok; ++v) {
                        int hits = arc_covers_gap(r, v, a) + arc_covers_gap(r, v, b) +
                                   arc_covers_gap(r, v, c) + arc_covers_gap(r, v, d);
                        if (hits > 1) ok = false;
                    }
                    if (ok) return std::array<int, 4>{a, b, c, d};
                }
    return std::nullopt;
}

}  // namespace

bool corner_placement_exists(const ArcRepresentation& arcs) {
    return find_corner_gaps(arcs).has_value();
}

EprResult arcs_to_boundary_paths(const ArcRepresentation& arcs) {
    check_arc_representation(arcs);
    auto cut = find_corner_gaps(arcs);
    if (!cut)
        throw BuildError("no 4-corner placement with at most one corner per arc");
    const int m = arcs.circle_size;
    const auto corners = *cut;

    // positions on side s: corners[s]+1 .. corners[s+1] (cyclic)
    std::array<int, 4> count;
    for (int s = 0; s < 4; ++s)
        count[s] = ((corners[(s + 1) % 4] - corners[s]) % m + m) % m;
    std::array<int, 4> len;  // side s edge count, opposite sides equalized
    for (int s = 0; s < 4; ++s) len[s] = count[s] + 1;
    int width = std::max(len[0], len[2]);
    int height = std::max(len[1], len[3]);
    std::array<int, 4> pad{width - len[0], height - len[1], width - len[2], height - len[3]};

    // rectangle boundary walked clockwise from the top-left corner:
    // top row left->right, right column top->bottom, bottom right->left,
    // left column bottom->top
    int perimeter = 2 * (width + height);
    std::vector<GridPoint> boundary(perimeter);
    {
        int i = 0;
        for (int c = 0; c < width; ++c) boundary[i++] = {height, c};
        for (int r = height; r > 0; --r) boundary[i++] = {r, width};
        for (int c = width; c > 0; --c) boundary[i++] = {0, c};
        for (int r = 0; r < height; ++r) boundary[i++] = {r, 0};
    }

    // perimeter index of every circle position; the corner-adjacent stretch of
    // each cut gap absorbs the padding
    std::vector<int> perim_of(m, -1);
    int cur = 0;
    for (int s = 0; s < 4; ++s) {
        cur += 1 + pad[s];
        for (int k = 1; k <= count[s]; ++k) {
            perim_of[(corners[s] + k) % m] = cur % perimeter;
            if (k < count[s]) ++cur;
        }
        ++cur;  // stretch onto the next corner
    }

    std::vector<LatticePath> paths;
    for (int v = 0; v < arcs.n(); ++v) {
        auto [s, e] = arcs.arcs[v];
        std::vector<GridPoint> pts;
        int from = perim_of[s], to = perim_of[e];
        for (int i = from;; i = (i + 1) % perimeter) {
            pts.push_back(boundary[i]);
            if (i == to) break;
        }
        paths.emplace_back(std::move(pts));
    }
    EprResult out{EpgRepresentation(std::move(paths)),
                  RectangleSpec{height, 0, 0, width}};
    return out;
}

// --------------------------------------------------------- wheel-case layouts

namespace {

// x2 = rim[0], x3 = rim[1], x4 = rim[2], x5 = rim[3] around the origin.
// True-pie shapes per rim slot, reused by all three wheel templates.
constexpr Dir kSlotDirs[4][2] = {
    {Dir::right, Dir::down},  // x2
    {Dir::right, Dir::up},    // x3
    {Dir::left, Dir::up},     // x4
    {Dir::left, Dir::down},   // x5
};

void lay_rim_and_triples(const ASetPartition& p, PathsOut& out, int rim_arm) {
    const GridPoint o{0, 0};
    for (int i = 0; i < 4; ++i)
        out.set(p.w.rim[i], lpath(o, kSlotDirs[i][0], rim_arm, kSlotDirs[i][1], rim_arm));
    for (int j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < p.triple[j].size(); ++i)
            out.set(p.triple[j][i],
                    lpath(o, kSlotDirs[j][0], 3 + (int)i, kSlotDirs[j][1], 3 + (int)i));
}

int layout_scale(const ASetPartition& p) {
    std::size_t mx = p.center.size();
    for (int i = 0; i < 4; ++i) mx = std::max({mx, p.side[i].size(), p.triple[i].size()});
    return 4 + static_cast<int>(mx);
}

// Fig. 5 geometry: sides 0 and 2 share the central row with A_{c'}; side 1
// climbs the central column; side 3 is empty.
EpgRepresentation cas1_layout_impl(int n, const ASetPartition& p) {
    PathsOut out(n);
    lay_rim_and_triples(p, out, layout_scale(p));
    for (std::size_t i = 0; i < p.side[0].size(); ++i)
        out.set(p.side[0][i], hseg(0, 0, 2 + (int)i));
    for (std::size_t i = 0; i < p.side[1].size(); ++i)
        out.set(p.side[1][i], vseg(0, 0, 2 + (int)i));
    for (std::size_t i = 0; i < p.side[2].size(); ++i)
        out.set(p.side[2][i], hseg(0, -(2 + (int)i), 0));
    for (std::size_t i = 0; i < p.center.size(); ++i)
        out.set(p.center[i], hseg(0, -(2 + (int)i), 2 + (int)i));
    return out.finish();
}

// Fig. 6 geometry: the single side block sits to the right of column 1 on the
// central row; the adjacent part of A_{c'} spans past it, the non-adjacent
// part stops at column 1.  Rim slots rotate so the shared arm points right.
EpgRepresentation cas2_layout_impl(int n, const ASetPartition& p,
                                   const std::vector<int>& adj_part,
                                   const std::vector<int>& nonadj_part) {
    PathsOut out(n);
    const GridPoint o{0, 0};
    int arm = layout_scale(p);
    // rim slot shapes rotated one step: x3 = down+right, x4 = right+up,
    // x5 = left+up, x2 = left+down; side[1] (between x3 and x4) then lives on
    // the right arm of the row
    const Dir dirs[4][2] = {
        {Dir::left, Dir::down},   // x2
        {Dir::down, Dir::right},  // x3
        {Dir::right, Dir::up},    // x4
        {Dir::left, Dir::up},     // x5
    };
    for (int i = 0; i < 4; ++i)
        out.set(p.w.rim[i], lpath(o, dirs[i][0], arm, dirs[i][1], arm));
    for (int j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < p.triple[j].size(); ++i)
            out.set(p.triple[j][i], lpath(o, dirs[j][0], 3 + (int)i, dirs[j][1], 3 + (int)i));
    for (std::size_t i = 0; i < p.side[1].size(); ++i)
        out.set(p.side[1][i], hseg(0, 1, 2 + (int)i));
    for (std::size_t i = 0; i < nonadj_part.size(); ++i)
        out.set(nonadj_part[i], hseg(0, -(2 + (int)i), 1));
    for (std::size_t i = 0; i < adj_part.size(); ++i)
        out.set(adj_part[i], hseg(0, -(3 + (int)i), 2 + (int)i));
    return out.finish();
}

// Fig. 7 geometry: A_{c'} splits into two anticomplete cliques, one along the
// central row and one along the central column.
EpgRepresentation cas3_layout_impl(int n, const ASetPartition& p,
                                   const std::vector<int>& row_clique,
                                   const std::vector<int>& col_clique) {
    PathsOut out(n);
    lay_rim_and_triples(p, out, layout_scale(p));
    for (std::size_t i = 0; i < row_clique.size(); ++i)
        out.set(row_clique[i], hseg(0, -(2 + (int)i), 2 + (int)i));
    for (std::size_t i = 0; i < col_clique.size(); ++i)
        out.set(col_clique[i], vseg(0, -(2 + (int)i), 2 + (int)i));
    return out.finish();
}

}  // namespace

// ------------------------------------------------------------- wheel dispatch

namespace {

WheelWitness relabel(const WheelWitness& w, int rot, bool reflect) {
    WheelWitness out;
    out.center = w.center;
    for (int i = 0; i < 4; ++i)
        out.rim[i] = w.rim[reflect ? ((rot - i) % 4 + 4) % 4 : (rot + i) % 4];
    return out;
}

bool complete_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return is_complete_between(g, a, b);
}
bool anticomplete_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return is_anticomplete_between(g, a, b);
}

std::optional<EpgRepresentation> try_wheel_layout(const Graph& g, const WheelWitness& base) {
    // the relabeled witness is still an induced wheel; recompute the partition
    // per orientation and match the templates in a fixed order
    ASetPartition part0 = partition_around_c4(g, base);  // throws on lemma violations

    bool all_sides_empty = true;
    for (int s = 0; s < 4; ++s) all_sides_empty &= part0.side[s].empty();
    if (all_sides_empty) {
        // split A_{c'} into at most two anticomplete cliques (components)
        std::vector<int> comp(g.n(), -1);
        std::vector<std::vector<int>> groups;
        for (int v : part0.center) {
            if (comp[v] >= 0) continue;
            std::vector<int> group, stack{v};
            comp[v] = static_cast<int>(groups.size());
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                group.push_back(x);
                for (int y : part0.center)
                    if (comp[y] < 0 && g.adjacent(x, y)) {
                        comp[y] = comp[v];
                        stack.push_back(y);
                    }
            }
            std::sort(group.begin(), group.end());
            groups.push_back(std::move(group));
        }
        if (groups.size() > 2)
            throw StructuralError("A_{c'} splits into more than two anticomplete parts (claw)",
                                  {groups[0][0], groups[2][0]});
        for (const auto& q : groups)
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = i + 1; j < q.size(); ++j)
                    if (!g.adjacent(q[i], q[j]))
                        throw StructuralError("A_{c'} component is not a clique (H_3)",
                                              {q[i], q[j]});
        std::vector<int> row = groups.empty() ? std::vector<int>{} : groups[0];
        std::vector<int> col = groups.size() > 1 ? groups[1] : std::vector<int>{};
        return cas3_layout_impl(g.n(), part0, row, col);
    }

    // template 1 (Fig. 5): after some dihedral relabeling, side 3 empty, the
    // center set a clique, complete to sides 0/2 and anticomplete to side 1
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int rot = 0; rot < 4; ++rot) {
            WheelWitness w = relabel(base, rot, reflect);
            ASetPartition p = partition_around_c4(g, w);
            if (!p.side[3].empty()) continue;
            if (!is_clique(g, p.center)) continue;
            if (!complete_between(g, p.center, p.side[0])) continue;
            if (!complete_between(g, p.center, p.side[2])) continue;
            if (!anticomplete_between(g, p.center, p.side[1])) continue;
            return cas1_layout_impl(g.n(), p);
        }

    // template 2 (Fig. 6): one nonempty side; A_{c'} splits into a clique
    // complete to it and a clique anticomplete to it, their union a clique
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int rot = 0; rot < 4; ++rot) {
            WheelWitness w = relabel(base, rot, reflect);
            ASetPartition p = partition_around_c4(g, w);
            if (p.side[1].empty() || !p.side[0].empty() || !p.side[2].empty() ||
                !p.side[3].empty())
                continue;
            std::vector<int> adj_part, nonadj_part;
            bool mixed = false;
            for (int c : p.center) {
                bool all = true, none = true;
                for (int b : p.side[1]) {
                    if (g.adjacent(c, b)) none = false;
                    else all = false;
                }
                if (all) adj_part.push_back(c);
                else if (none) nonadj_part.push_back(c);
                else { mixed = true; break; }
            }
            if (mixed)
                throw StructuralError("A_{c'} vertex neither complete nor anticomplete "
                                      "to the side block (G_4)", {p.center[0], p.side[1][0]});
            if (!is_clique(g, adj_part))
                throw StructuralError("A_{c'}^a is not a clique (H_4)", {-1, -1});
            if (!is_clique(g, nonadj_part))
                throw StructuralError("A_{c'}^{na} is not a clique (claw)", {-1, -1});
            if (!complete_between(g, adj_part, nonadj_part))
                throw StructuralError("A_{c'}^a u A_{c'}^{na} is not a clique (G_3)", {-1, -1});
            return cas2_layout_impl(g.n(), p, adj_part, nonadj_part);
        }

    return std::nullopt;
}

}  // namespace

// --------------------------------------------------------------- case 2 (no W4)

namespace {

struct TrianglePartition {
    std::array<int, 3> tri;                  // x_1, x_2, x_3
    std::array<std::vector<int>, 3> side;    // side[j]: adjacent to exactly {tri[j], tri[j+1]}
    std::array<std::vector<int>, 3> csplit;  // A_c^{j+1}: complete to side[j-1], side[j], anti side[j+1]
};

std::optional<TrianglePartition> try_case2_triangle(const Graph& g, std::array<int, 3> tri) {
    TrianglePartition part;
    part.tri = tri;
    std::vector<int> a_c;
    for (int v = 0; v < g.n(); ++v) {
        if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
        unsigned pat = 0;
        for (int i = 0; i < 3; ++i)
            if (g.adjacent(v, tri[i])) pat |= 1u << i;
        if (pat == 0b111u) {
            a_c.push_back(v);
        } else if (pat == 0b011u) {
            part.side[0].push_back(v);
        } else if (pat == 0b110u) {
            part.side[1].push_back(v);
        } else if (pat == 0b101u) {
            part.side[2].push_back(v);
        } else {
            return std::nullopt;  // some vertex adjacent to <= 1 triangle vertex
        }
    }
    for (int j = 0; j < 3; ++j)
        if (part.side[j].empty()) return std::nullopt;  // Case 2 needs all three
    for (int j = 0; j < 3; ++j) {
        if (!is_clique(g, part.side[j])) return std::nullopt;
        if (!is_anticomplete_between(g, part.side[j], part.side[(j + 1) % 3])) return std::nullopt;
    }
    if (!is_clique(g, a_c)) return std::nullopt;
    for (int v : a_c) {
        bool placed = false;
        for (int j = 0; j < 3 && !placed; ++j) {
            // A_c^{j+1}: complete to the sides at tri[j], anticomplete to the other
            if (is_complete_between(g, {v}, part.side[j]) &&
                is_complete_between(g, {v}, part.side[(j + 2) % 3]) &&
                is_anticomplete_between(g, {v}, part.side[(j + 1) % 3])) {
                part.csplit[j].push_back(v);
                placed = true;
            }
        }
        if (!placed) return std::nullopt;
    }
    return part;
}

// Fig. 8 geometry: x_1 along the whole central row, x_2 and x_3 bending up at
// the origin; side blocks on the right row, the top column and the left row.
EpgRepresentation cas4_layout(int n, const TrianglePartition& p) {
    PathsOut out(n);
    const GridPoint o{0, 0};
    std::size_t mx = 1;
    for (int j = 0; j < 3; ++j) mx = std::max({mx, p.side[j].size(), p.csplit[j].size()});
    int arm = 4 + static_cast<int>(mx);
    out.set(p.tri[0], hseg(0, -arm, arm));
    out.set(p.tri[1], lpath(o, Dir::right, arm, Dir::up, arm));
    out.set(p.tri[2], lpath(o, Dir::left, arm, Dir::up, arm));
    for (std::size_t i = 0; i < p.side[0].size(); ++i)  // adj x1,x2: right row
        out.set(p.side[0][i], hseg(0, 1, 2 + (int)i));
    for (std::size_t i = 0; i < p.side[1].size(); ++i)  // adj x2,x3: top column
        out.set(p.side[1][i], vseg(0, 1, 2 + (int)i));
    for (std::size_t i = 0; i < p.side[2].size(); ++i)  // adj x3,x1: left row
        out.set(p.side[2][i], hseg(0, -(2 + (int)i), -1));
    for (std::size_t i = 0; i < p.csplit[0].size(); ++i)
        out.set(p.csplit[0][i], hseg(0, -(3 + (int)i), 3 + (int)i));
    for (std::size_t i = 0; i < p.csplit[1].size(); ++i)
        out.set(p.csplit[1][i], lpath(o, Dir::right, 3 + (int)i, Dir::up, 3 + (int)i));
    for (std::size_t i = 0; i < p.csplit[2].size(); ++i)
        out.set(p.csplit[2][i], lpath(o, Dir::left, 3 + (int)i, Dir::up, 3 + (int)i));
    return out.finish();
}

}  // namespace

// ------------------------------------------------------------------ dispatch

namespace {

EprResult phca_boundary_route(const Graph& g) {
    ArcFlags flags{true, true, true};
    auto model = search_arc_representation(
        g, flags, [](const ArcRepresentation& r) { return corner_placement_exists(r); });
    if (!model)
        throw BuildError("no proper no-3-cover arc model with a valid corner placement; "
                         "input outside the constructive cases");
    return arcs_to_boundary_paths(*model);
}

}  // namespace

EpgRepresentation build_b1_epg(const Graph& g) {
    Verdict filter = classify_b1_epg(g);  // PreconditionError if not PCA
    if (!filter.yes)
        throw BuildError("input is not B1-EPG; forbidden subgraph " +
                         filter.forbidden->family.name());

    if (is_interval(g).yes) return interval_zero_bend_layout(g);

    auto witnesses = all_w4_witnesses(g);
    for (const WheelWitness& w : witnesses)
        if (auto rep = try_wheel_layout(g, w)) return *rep;
    if (!witnesses.empty())
        throw BuildError("graph has induced 4-wheels but no witness admits a template layout");

    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c) {
                if (!(g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))) continue;
                // each vertex of the triangle may play x_1
                for (std::array<int, 3> tri : {std::array<int, 3>{a, b, c},
                                               std::array<int, 3>{b, c, a},
                                               std::array<int, 3>{c, a, b}})
                    if (auto part = try_case2_triangle(g, tri))
                        return cas4_layout(g.n(), *part);
            }

    return phca_boundary_route(g).rep;
}

EprResult build_b1_epr(const Graph& g) {
    Verdict filter = classify_b1_epr(g);
    if (!filter.yes)
        throw BuildError("input is not B1-EPR; forbidden subgraph " +
                         filter.forbidden->family.name());
    if (is_interval(g).yes) {
        EpgRepresentation rep = interval_zero_bend_layout(g);
        return {rep, bounding_rectangle(rep)};
    }
    return phca_boundary_route(g);
}

}  // namespace pcaepg
