#include "pcaepg/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pcaepg {

namespace {

std::uint64_t key_under(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t key = 0;
    int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            key = (key << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
    EdgeList edges;
    int bits = n * (n - 1) / 2;
    int bit = bits - 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, --bit)
            if ((key >> bit) & 1u) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.n() > 8) throw GraphError("canonical_key: n > 8");
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = key_under(g, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, key_under(g, perm));
    return best;
}

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 7) throw GraphError("all_graphs: n must be in 1..7");
    if (n == 1) return {Graph(1, {})};
    std::set<std::uint64_t> keys;
    for (const Graph& h : all_graphs(n - 1)) {
        EdgeList base = h.edges();
        for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
            EdgeList edges = base;
            for (int v = 0; v < n - 1; ++v)
                if ((nb >> v) & 1u) edges.emplace_back(v, n - 1);
            keys.insert(canonical_key(Graph(n, edges)));
        }
    }
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (std::uint64_t k : keys) out.push_back(graph_from_key(n, k));
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace pcaepg
