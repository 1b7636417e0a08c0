#include "pcaepg/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "pcaepg/classify.hpp"
#include "pcaepg/enumerate.hpp"
#include "pcaepg/graph_io.hpp"

namespace pcaepg {

// ---------------------------------------------------------------- EPG search

namespace {

constexpr int kMaxGrid = 12;
constexpr int kMaskWords = 5;  // 320 bits >= 2*12*11 grid edges

struct EdgeMask {
    std::array<std::uint64_t, kMaskWords> w{};
    void set(int bit) { w[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
    bool intersects(const EdgeMask& o) const {
        for (int i = 0; i < kMaskWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
};

// Candidate path: 0-bend segment or an L with corner (r,c) and two arms.
struct Candidate {
    std::int8_t kind;  // 0 horizontal, 1 vertical, 2 bent
    std::int8_t r, c;  // anchor: (r,c1) / (r1,c) / corner
    std::int8_t dh, dv;
    std::int8_t lh, lv;
    EdgeMask mask;
};

int hedge_index(int r, int c, int cols) { return r * (cols - 1) + c; }
int vedge_index(int r, int c, int rows, int cols) { return rows * (cols - 1) + c * (rows - 1) + r; }

void add_hrun(EdgeMask& m, int r, int c1, int c2, int cols) {
    for (int c = c1; c < c2; ++c) m.set(hedge_index(r, c, cols));
}
void add_vrun(EdgeMask& m, int r1, int r2, int c, int rows, int cols) {
    for (int r = r1; r < r2; ++r) m.set(vedge_index(r, c, rows, cols));
}

std::vector<Candidate> enumerate_candidates(int rows, int cols) {
    std::vector<Candidate> out;
    for (int r = 0; r < rows; ++r)
        for (int c1 = 0; c1 < cols; ++c1)
            for (int c2 = c1 + 1; c2 < cols; ++c2) {
                Candidate cand{0, (std::int8_t)r, (std::int8_t)c1, 0, 0, (std::int8_t)(c2 - c1), 0, {}};
                add_hrun(cand.mask, r, c1, c2, cols);
                out.push_back(cand);
            }
    for (int c = 0; c < cols; ++c)
        for (int r1 = 0; r1 < rows; ++r1)
            for (int r2 = r1 + 1; r2 < rows; ++r2) {
                Candidate cand{1, (std::int8_t)r1, (std::int8_t)c, 0, 0, 0, (std::int8_t)(r2 - r1), {}};
                add_vrun(cand.mask, r1, r2, c, rows, cols);
                out.push_back(cand);
            }
    const int dirs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};  // (dh, dv)
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (auto [dh, dv] : dirs) {
                int maxh = dh > 0 ? cols - 1 - c : c;
                int maxv = dv > 0 ? rows - 1 - r : r;
                for (int lh = 1; lh <= maxh; ++lh)
                    for (int lv = 1; lv <= maxv; ++lv) {
                        Candidate cand{2, (std::int8_t)r, (std::int8_t)c,
                                       (std::int8_t)dh, (std::int8_t)dv,
                                       (std::int8_t)lh, (std::int8_t)lv, {}};
                        if (dh > 0) add_hrun(cand.mask, r, c, c + lh, cols);
                        else add_hrun(cand.mask, r, c - lh, c, cols);
                        if (dv > 0) add_vrun(cand.mask, r, r + lv, c, rows, cols);
                        else add_vrun(cand.mask, r - lv, r, c, rows, cols);
                        out.push_back(cand);
                    }
            }
    return out;
}

LatticePath candidate_path(const Candidate& k) {
    std::vector<GridPoint> pts;
    if (k.kind == 0) {
        for (int c = k.c; c <= k.c + k.lh; ++c) pts.push_back({k.r, c});
    } else if (k.kind == 1) {
        for (int r = k.r; r <= k.r + k.lv; ++r) pts.push_back({r, k.c});
    } else {
        // horizontal arm end -> corner -> vertical arm end
        for (int i = k.lh; i >= 1; --i) pts.push_back({k.r, k.c + k.dh * i});
        pts.push_back({k.r, k.c});
        for (int i = 1; i <= k.lv; ++i) pts.push_back({k.r + k.dv * i, k.c});
    }
    return LatticePath(std::move(pts));
}

// fixed-width bitset over candidate indices
struct Domain {
    std::vector<std::uint64_t> w;
    explicit Domain(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
};

}  // namespace

EpgSearchResult search_b1_epg(const Graph& g, const SearchBudget& budget) {
    if (budget.grid_rows < 2 || budget.grid_cols < 2 ||
        budget.grid_rows > kMaxGrid || budget.grid_cols > kMaxGrid)
        throw GraphError("grid bounds must be in 2.." + std::to_string(kMaxGrid));

    const int rows = budget.grid_rows, cols = budget.grid_cols;
    const std::vector<Candidate> cands = enumerate_candidates(rows, cols);
    const int nc = static_cast<int>(cands.size());
    const int words = (nc + 63) / 64;

    // share[i] = bitset of candidates sharing >= 1 grid edge with candidate i
    std::vector<std::uint64_t> share(static_cast<std::size_t>(nc) * words, 0);
    for (int i = 0; i < nc; ++i)
        for (int j = i; j < nc; ++j)
            if (cands[i].mask.intersects(cands[j].mask)) {
                share[static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                share[static_cast<std::size_t>(j) * words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
            }

    const int n = g.n();
    // static placement order: vertex 0 first (canonical-shape restriction),
    // then most placed-neighbours, ties by degree then id
    std::vector<int> order{0};
    {
        std::vector<char> placed(n, 0);
        placed[0] = 1;
        while (static_cast<int>(order.size()) < n) {
            int best = -1, bestcnt = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int cnt = 0;
                for (int u : order)
                    if (g.adjacent(u, v)) ++cnt;
                if (cnt > bestcnt ||
                    (cnt == bestcnt && best >= 0 &&
                     (g.degree(v) > g.degree(best) || (g.degree(v) == g.degree(best) && v < best)))) {
                    best = v;
                    bestcnt = cnt;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    // slot domains; slot 0 restricted to canonical shapes under grid symmetry
    std::vector<std::vector<Domain>> dom(n + 1, std::vector<Domain>(n, Domain(nc)));
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < nc; ++i) {
            if (s == 0) {
                const Candidate& k = cands[i];
                bool canonical = (k.kind == 0) || (k.kind == 2 && k.dh == 1 && k.dv == 1) ||
                                 (k.kind == 1 && rows != cols);
                if (!canonical) continue;
            }
            dom[0][s].set(i);
        }

    std::vector<int> chosen(n, -1);
    std::int64_t nodes = 0;
    bool capped = false;

    // iterative DFS over slots
    std::vector<int> cursor(n, 0);  // next candidate index to try at each level
    int level = 0;
    while (level >= 0) {
        if (level == n) {
            std::vector<LatticePath> paths;
            paths.reserve(n);
            std::vector<int> by_vertex(n);
            for (int s = 0; s < n; ++s) by_vertex[order[s]] = chosen[s];
            for (int v = 0; v < n; ++v) paths.push_back(candidate_path(cands[by_vertex[v]]));
            return {SearchStatus::found, EpgRepresentation(std::move(paths)), nodes};
        }
        // find next set bit >= cursor[level] in dom[level][level]
        int i = -1;
        {
            const Domain& d = dom[level][level];
            int start = cursor[level];
            for (int wd = start >> 6; wd < words && i < 0; ++wd) {
                std::uint64_t x = d.w[wd];
                if (wd == start >> 6) x &= ~std::uint64_t{0} << (start & 63);
                while (x) {
                    int bit = __builtin_ctzll(x);
                    i = (wd << 6) + bit;
                    break;
                }
            }
        }
        if (i < 0 || i >= nc) {
            --level;
            if (level >= 0) cursor[level] = chosen[level] + 1;
            continue;
        }
        cursor[level] = i + 1;
        if (++nodes > budget.node_limit) {
            capped = true;
            break;
        }
        chosen[level] = i;
        // filter deeper domains
        bool dead = false;
        int u = order[level];
        const std::uint64_t* srow = &share[static_cast<std::size_t>(i) * words];
        for (int s = level + 1; s < n; ++s) {
            const Domain& src = dom[level][s];
            Domain& dst = dom[level + 1][s];
            bool adj = g.adjacent(u, order[s]);
            bool any = false;
            for (int wd2 = 0; wd2 < words; ++wd2) {
                std::uint64_t v = adj ? (src.w[wd2] & srow[wd2]) : (src.w[wd2] & ~srow[wd2]);
                dst.w[wd2] = v;
                any |= (v != 0);
            }
            if (!any) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        ++level;
        cursor[level] = 0;
    }
    return {capped ? SearchStatus::capped : SearchStatus::exhausted, std::nullopt, nodes};
}

// ---------------------------------------------------------------- arc search

namespace {

struct ArcSearch {
    const Graph& g;
    ArcFlags flags;
    const std::function<bool(const ArcRepresentation&)>& accept;
    int n, m;  // m = 2n positions
    std::vector<int> spos, epos;
    std::vector<std::uint64_t> mask;  // cell mask, valid once both endpoints placed
    std::uint64_t full;
    std::optional<ArcRepresentation> result;

    ArcSearch(const Graph& graph, ArcFlags f,
              const std::function<bool(const ArcRepresentation&)>& acc)
        : g(graph), flags(f), accept(acc), n(graph.n()), m(2 * graph.n()),
          spos(n, -1), epos(n, -1), mask(n, 0), full(full_cell_mask(2 * graph.n())) {}

    bool both(int v) const { return spos[v] >= 0 && epos[v] >= 0; }

    std::uint64_t cell_mask(int s, int e) const {
        int cells = 2 * m;
        std::uint64_t mk = 0;
        for (int c = (2 * s + 1) % cells; c != 2 * e; c = (c + 1) % cells)
            mk |= std::uint64_t{1} << c;
        return mk;
    }

    // full pairwise check of v (just closed) against all fully placed arcs
    bool close_checks(int v) {
        mask[v] = cell_mask(spos[v], epos[v]);
        for (int u = 0; u < n; ++u) {
            if (u == v || !both(u)) continue;
            bool meet = (mask[u] & mask[v]) != 0;
            if (meet != g.adjacent(u, v)) return false;
            if (flags.proper && ((mask[u] & ~mask[v]) == 0 || (mask[v] & ~mask[u]) == 0)) return false;
            if (flags.normal && (mask[u] | mask[v]) == full) return false;
        }
        if (flags.helly3) {
            for (int u = 0; u < n; ++u) {
                if (u == v || !both(u)) continue;
                for (int w = u + 1; w < n; ++w) {
                    if (w == v || !both(w)) continue;
                    if ((mask[u] | mask[v] | mask[w]) == full) return false;
                }
            }
        }
        return true;
    }

    bool run(int pos) {
        if (pos == m) {
            ArcRepresentation rep;
            rep.circle_size = m;
            for (int v = 0; v < n; ++v) rep.arcs.emplace_back(spos[v], epos[v]);
            if (!(arc_intersection_graph(rep) == g)) return false;  // paranoia re-check
            if (flags.proper && !arcs_proper(rep)) return false;
            if (flags.normal && !arcs_normal(rep)) return false;
            if (flags.helly3 && !arcs_helly3(rep)) return false;
            if (!accept(rep)) return false;
            result = rep;
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (both(v)) continue;
            if (spos[v] >= 0) {
                // close v normally
                bool ok = true;
                if (flags.proper) {
                    // an arc opened before v and still open would strictly contain v
                    for (int u = 0; u < n && ok; ++u)
                        if (u != v && spos[u] >= 0 && epos[u] < 0 && spos[u] < spos[v]) ok = false;
                }
                for (int u = 0; u < n && ok; ++u) {
                    if (u == v || spos[u] >= 0 || epos[u] < 0) continue;
                    // u wrap-open: decidable against v = (spos[v], pos)
                    bool meet = spos[v] < epos[u];
                    if (meet != g.adjacent(u, v)) ok = false;
                }
                if (ok) {
                    epos[v] = pos;
                    if (close_checks(v) && run(pos + 1)) return true;
                    epos[v] = -1;
                    mask[v] = 0;
                }
            } else if (epos[v] >= 0) {
                // close a wrap arc: place its start
                bool ok = true;
                for (int u = 0; u < n && ok; ++u)
                    if (u != v && spos[u] >= 0 && epos[u] < 0 && !g.adjacent(u, v)) ok = false;
                if (ok) {
                    spos[v] = pos;
                    if (close_checks(v) && run(pos + 1)) return true;
                    spos[v] = -1;
                    mask[v] = 0;
                }
            } else {
                // open v with its start
                bool ok = true;
                for (int u = 0; u < n && ok; ++u) {
                    if (u == v) continue;
                    if (spos[u] >= 0 && epos[u] < 0 && !g.adjacent(u, v)) ok = false;  // open u meets v
                    if (flags.proper && both(u) && epos[u] < spos[u]) ok = false;  // wrap-closed u contains v
                }
                if (ok) {
                    spos[v] = pos;
                    if (run(pos + 1)) return true;
                    spos[v] = -1;
                }
                // open v with its end (wrap arc): v covers every already-touched cell region
                ok = true;
                for (int u = 0; u < n && ok; ++u) {
                    if (u == v || (spos[u] < 0 && epos[u] < 0)) continue;
                    if (!g.adjacent(u, v)) ok = false;  // v meets every touched arc
                    if (flags.proper && both(u) && spos[u] < epos[u]) ok = false;  // closed u inside v's prefix
                }
                if (ok && v != 0) {  // arc 0's start is pinned at position 0
                    epos[v] = pos;
                    if (run(pos + 1)) return true;
                    epos[v] = -1;
                }
            }
        }
        return false;
    }
};

}  // namespace

std::optional<ArcRepresentation> search_arc_representation(
    const Graph& g, ArcFlags flags,
    const std::function<bool(const ArcRepresentation&)>& accept) {
    if (g.n() > 8) throw GraphError("search_arc_representation: n > 8");
    ArcSearch search(g, flags, accept);
    search.spos[0] = 0;  // rotation symmetry: arc 0 starts at position 0
    search.run(1);
    return search.result;
}

std::optional<ArcRepresentation> search_arc_representation(const Graph& g, ArcFlags flags) {
    static const std::function<bool(const ArcRepresentation&)> yes =
        [](const ArcRepresentation&) { return true; };
    return search_arc_representation(g, flags, yes);
}

// -------------------------------------------------------------- cross validation

std::string CrossValidateReport::to_text() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << '\n';
    os << "checked " << checked << " PCA graphs: " << agreements << " agree, "
       << disagreements << " disagree, " << inconclusive << " inconclusive\n";
    return os.str();
}

CrossValidateReport cross_validate(int max_n, const SearchBudget& budget) {
    if (max_n < 1 || max_n > 7) throw GraphError("cross_validate: max_n must be in 1..7");
    CrossValidateReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            Verdict pca = is_pca(g);
            if (!pca.yes) continue;
            ++report.checked;
            Verdict cls = classify_b1_epg(g);
            EpgSearchResult res = search_b1_epg(g, budget);
            std::string status;
            if (res.status == SearchStatus::capped) {
                status = "inconclusive";
                ++report.inconclusive;
            } else if ((res.status == SearchStatus::found) == cls.yes) {
                status = "agree";
                ++report.agreements;
            } else {
                status = "disagree";
                ++report.disagreements;
            }
            std::string oracle = res.status == SearchStatus::found
                                     ? "found"
                                     : (res.status == SearchStatus::exhausted ? "none" : "capped");
            report.lines.push_back(encode_graph6(g) + ' ' + (cls.yes ? "B1" : "notB1") + ' ' +
                                   oracle + ' ' + status);
        }
    }
    return report;
}

}  // namespace pcaepg
