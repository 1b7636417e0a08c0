#include "pcaepg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pcaepg {

Graph::Graph(int n, const EdgeList& edges) : n_(n), m_(0) {
    if (n < 1) throw GraphError("graph needs at least one vertex");
    if (n > kMaxVertices) throw GraphError("graph too large (max " + std::to_string(kMaxVertices) + " vertices)");
    adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
        adj_[u] |= (std::uint64_t{1} << v);
        adj_[v] |= (std::uint64_t{1} << u);
    }
    nbrs_.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u)
            if (adjacent(v, u)) nbrs_[v].push_back(u);
        m_ += static_cast<int>(nbrs_[v].size());
    }
    m_ /= 2;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph graph_from_edges(int n, const EdgeList& edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
    EdgeList e;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(g.n(), e);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    EdgeList e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + g1.n(), v + g1.n());
    return Graph(g1.n() + g2.n(), e);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

int diameter(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) {
        for (int x : bfs_distances(g, v)) {
            if (x < 0) throw GraphError("diameter of a disconnected graph");
            d = std::max(d, x);
        }
    }
    return d;
}

Graph graph_power(const Graph& g, int k) {
    if (k < 0) throw GraphError("negative power");
    EdgeList e;
    for (int v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = v + 1; u < g.n(); ++u)
            if (dist[u] > 0 && dist[u] <= k) e.emplace_back(v, u);
    }
    return Graph(g.n(), e);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw GraphError("induced subgraph on empty vertex set");
    std::set<int> seen;
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw GraphError("induced subgraph vertex out of range");
        if (!seen.insert(v).second) throw GraphError("induced subgraph vertex repeated");
    }
    EdgeList e;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(s.size()), e);
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_dominating(const Graph& g, const std::vector<int>& vs) {
    std::uint64_t covered = 0;
    for (int v : vs) covered |= g.neighbor_mask(v) | (std::uint64_t{1} << v);
    std::uint64_t all = (g.n() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n()) - 1);
    return (covered & all) == all;
}

bool is_complete_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (u != v && !g.adjacent(u, v)) return false;
    return true;
}

bool is_anticomplete_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (g.adjacent(u, v)) return false;
    return true;
}

bool is_chordal(const Graph& g) {
    // Peel simplicial vertices; chordal iff the whole graph peels away.
    std::uint64_t alive = (g.n() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n()) - 1);
    int remaining = g.n();
    while (remaining > 0) {
        bool peeled = false;
        for (int v = 0; v < g.n() && !peeled; ++v) {
            if (!((alive >> v) & 1u)) continue;
            std::uint64_t nb = g.neighbor_mask(v) & alive;
            bool simplicial = true;
            for (int u = 0; u < g.n() && simplicial; ++u) {
                if (!((nb >> u) & 1u)) continue;
                // every other live neighbour of v must be adjacent to u
                if ((nb & ~(std::uint64_t{1} << u)) & ~g.neighbor_mask(u)) simplicial = false;
            }
            if (simplicial) {
                alive &= ~(std::uint64_t{1} << v);
                --remaining;
                peeled = true;
            }
        }
        if (!peeled) return false;
    }
    return true;
}

namespace {

bool connected_avoiding(const Graph& g, int a, int b, std::uint64_t banned) {
    if (((banned >> a) & 1u) || ((banned >> b) & 1u)) return false;
    std::uint64_t seen = std::uint64_t{1} << a;
    std::vector<int> stack{a};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) return true;
        std::uint64_t next = g.neighbor_mask(v) & ~seen & ~banned;
        while (next) {
            int u = __builtin_ctzll(next);
            next &= next - 1;
            seen |= std::uint64_t{1} << u;
            stack.push_back(u);
        }
    }
    return false;
}

}  // namespace

std::vector<int> find_asteroidal_triple(const Graph& g) {
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.n(); ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                auto closed = [&](int v) { return g.neighbor_mask(v) | (std::uint64_t{1} << v); };
                if (connected_avoiding(g, a, b, closed(c)) &&
                    connected_avoiding(g, a, c, closed(b)) &&
                    connected_avoiding(g, b, c, closed(a)))
                    return {a, b, c};
            }
        }
    return {};
}

bool has_asteroidal_triple(const Graph& g) { return !find_asteroidal_triple(g).empty(); }

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::vector<int>>& out) {
    if (!p && !x) {
        std::vector<int> clique;
        while (r) {
            int v = __builtin_ctzll(r);
            r &= r - 1;
            clique.push_back(v);
        }
        out.push_back(std::move(clique));
        return;
    }
    // pivot with most neighbours in p
    int pivot = -1, best = -1;
    std::uint64_t px = p | x;
    for (std::uint64_t m = px; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int cnt = __builtin_popcountll(p & g.neighbor_mask(v));
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint64_t cands = p & ~g.neighbor_mask(pivot);
    while (cands) {
        int v = __builtin_ctzll(cands);
        cands &= cands - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(g, r | bit, p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t all = (g.n() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n()) - 1);
    bron_kerbosch(g, 0, all, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pcaepg
