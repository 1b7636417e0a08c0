#include "pcaepg/partition.hpp"

#include <algorithm>

namespace pcaepg {

bool wheel_witness_valid(const Graph& g, const WheelWitness& w) {
    for (int i = 0; i < 4; ++i) {
        if (!g.adjacent(w.rim[i], w.rim[(i + 1) % 4])) return false;
        if (w.center >= 0 && !g.adjacent(w.center, w.rim[i])) return false;
    }
    return !g.adjacent(w.rim[0], w.rim[2]) && !g.adjacent(w.rim[1], w.rim[3]);
}

std::vector<WheelWitness> all_w4_witnesses(const Graph& g) {
    std::vector<WheelWitness> out;
    for (int c = 0; c < g.n(); ++c) {
        const auto& nb = g.neighbors(c);
        int d = static_cast<int>(nb.size());
        if (d < 4) continue;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                for (int e = b + 1; e < d; ++e)
                    for (int f = e + 1; f < d; ++f) {
                        std::array<int, 4> q{nb[a], nb[b], nb[e], nb[f]};
                        // the three pairings of {q} into a cycle; exactly the
                        // induced-C4 ones survive
                        const std::array<std::array<int, 4>, 3> orders{{
                            {q[0], q[1], q[2], q[3]},
                            {q[0], q[1], q[3], q[2]},
                            {q[0], q[2], q[1], q[3]},
                        }};
                        for (const auto& rim : orders) {
                            WheelWitness w{c, rim};
                            if (!wheel_witness_valid(g, w)) continue;
                            // canonical start: smallest vertex first, then the
                            // smaller of its two cycle neighbours
                            std::array<int, 4> r = rim;
                            int mi = static_cast<int>(std::min_element(r.begin(), r.end()) - r.begin());
                            std::array<int, 4> canon;
                            int prev = r[(mi + 3) % 4], next = r[(mi + 1) % 4];
                            if (next < prev)
                                for (int i = 0; i < 4; ++i) canon[i] = r[(mi + i) % 4];
                            else
                                for (int i = 0; i < 4; ++i) canon[i] = r[(mi + 4 - i) % 4];
                            out.push_back({c, canon});
                        }
                    }
    }
    std::sort(out.begin(), out.end(), [](const WheelWitness& a, const WheelWitness& b) {
        return std::tie(a.center, a.rim) < std::tie(b.center, b.rim);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const WheelWitness& a, const WheelWitness& b) {
                              return a.center == b.center && a.rim == b.rim;
                          }),
              out.end());
    return out;
}

std::optional<WheelWitness> find_first_w4(const Graph& g) {
    auto all = all_w4_witnesses(g);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<int> dominating_triangle_from_w4(const Graph& g, const WheelWitness& w) {
    if (!wheel_witness_valid(g, w) || w.center < 0)
        throw StructuralError("invalid wheel witness", {w.center, -1});
    for (int i = 0; i < 4; ++i) {
        std::vector<int> tri{w.center, w.rim[i], w.rim[(i + 1) % 4]};
        if (is_dominating(g, tri)) {
            std::sort(tri.begin() + 1, tri.end());
            return tri;
        }
    }
    // fall back to any dominating triangle containing the center, then any at all
    for (int pass = 0; pass < 2; ++pass)
        for (int a = 0; a < g.n(); ++a)
            for (int b = a + 1; b < g.n(); ++b)
                for (int c = b + 1; c < g.n(); ++c) {
                    if (!(g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))) continue;
                    if (pass == 0 && a != w.center && b != w.center && c != w.center) continue;
                    if (is_dominating(g, {a, b, c})) {
                        if (a == w.center || b == w.center || c == w.center) {
                            std::vector<int> tri{w.center};
                            for (int v : {a, b, c})
                                if (v != w.center) tri.push_back(v);
                            return tri;
                        }
                        return {a, b, c};
                    }
                }
    throw StructuralError("no dominating triangle (contradicts the covering-arcs observation "
                          "for PCA inputs with an induced 4-wheel)", {w.center, -1});
}

namespace {

void check_clique(const Graph& g, const std::vector<int>& vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                throw StructuralError(std::string(what) + " is not a clique", {vs[i], vs[j]});
}

void check_complete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                    const char* what) {
    for (int u : a)
        for (int v : b)
            if (u != v && !g.adjacent(u, v))
                throw StructuralError(std::string(what) + " not complete", {u, v});
}

void check_anticomplete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                        const char* what) {
    for (int u : a)
        for (int v : b)
            if (g.adjacent(u, v))
                throw StructuralError(std::string(what) + " not anticomplete", {u, v});
}

}  // namespace

ASetPartition partition_around_c4(const Graph& g, const WheelWitness& w) {
    if (!wheel_witness_valid(g, w))
        throw StructuralError("invalid wheel witness", {w.center, -1});
    ASetPartition part;
    part.w = w;

    for (int v = 0; v < g.n(); ++v) {
        if (v == w.rim[0] || v == w.rim[1] || v == w.rim[2] || v == w.rim[3]) continue;
        unsigned pat = 0;
        for (int i = 0; i < 4; ++i)
            if (g.adjacent(v, w.rim[i])) pat |= 1u << i;
        bool placed = false;
        for (int s = 0; s < 4 && !placed; ++s)
            if (pat == ((1u << s) | (1u << ((s + 1) % 4)))) {
                part.side[s].push_back(v);
                placed = true;
            }
        for (int j = 0; j < 4 && !placed; ++j)
            if (pat == (0b1111u & ~(1u << ((j + 2) % 4)))) {
                part.triple[j].push_back(v);
                placed = true;
            }
        if (!placed) {
            if (pat == 0b1111u)
                part.center.push_back(v);
            else
                throw StructuralError(
                    "vertex adjacent to fewer than two or to opposite rim vertices only", {v, -1});
        }
    }

    // structural lemmas; the comments name the forbidden graph whose absence
    // forces each one
    for (int s = 0; s < 4; ++s) check_clique(g, part.side[s], "A_{j,j+1}");   // claw
    for (int j = 0; j < 4; ++j) check_clique(g, part.triple[j], "A_j");       // claw
    for (int j = 0; j < 4; ++j)
        check_complete(g, part.triple[j], part.center, "A_j / A_{c'}");       // H_1
    for (int j = 0; j < 4; ++j)
        check_complete(g, part.triple[j], part.triple[(j + 1) % 4], "A_j / A_{j+1}");  // H_2
    for (int j = 0; j < 2; ++j)
        check_anticomplete(g, part.triple[j], part.triple[j + 2], "A_j / A_{j+2}");    // H_7
    for (int s = 0; s < 4; ++s)
        for (int j = 0; j < 4; ++j)
            if (j != s && j != (s + 1) % 4)
                check_anticomplete(g, part.side[s], part.triple[j], "A_{j,k} / A_i");  // H_5
    for (int s = 0; s < 4; ++s)
        check_anticomplete(g, part.side[s], part.side[(s + 1) % 4], "A_{j,j+1} pairs");  // H_8, W_5
    for (int s = 0; s < 2; ++s)
        check_anticomplete(g, part.side[s], part.side[s + 2], "opposite A_{j,j+1}");  // co-C_6
    for (int s = 0; s < 4; ++s) {
        check_complete(g, part.side[s], part.triple[s], "A_{j,k} / A_j");     // claw
        check_complete(g, part.side[s], part.triple[(s + 1) % 4], "A_{j,k} / A_k");
    }
    return part;
}

}  // namespace pcaepg
