#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcaepg {

using Vertex = int;
using EdgeList = std::vector<std::pair<int, int>>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on vertex ids 0..n-1.
// Adjacency is kept both as per-vertex bitmasks (n <= 64) and as sorted
// neighbour lists; no loops, no multi-edges.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph(int n, const EdgeList& edges);

    int n() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }

    // Edges as (u, v) with u < v, lexicographically sorted.
    EdgeList edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_;
    int m_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::vector<int>> nbrs_;
};

Graph graph_from_edges(int n, const EdgeList& edges);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);

// u ~ v in the result iff 0 < dist_g(u, v) <= k.  k = 0 gives the edgeless graph.
Graph graph_power(const Graph& g, int k);

// Relabelled graph on |s| vertices; s must be nonempty, in range, duplicate-free.
// Vertex i of the result is s[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);
int diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_clique(const Graph& g, const std::vector<int>& vs);
bool is_independent(const Graph& g, const std::vector<int>& vs);
bool is_dominating(const Graph& g, const std::vector<int>& vs);
bool is_complete_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);
bool is_anticomplete_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

// No chordless cycle of length >= 4 (perfect elimination ordering search).
bool is_chordal(const Graph& g);

// Independent triple {a,b,c} such that each pair is connected by a path
// avoiding the closed neighbourhood of the third.
bool has_asteroidal_triple(const Graph& g);
std::vector<int> find_asteroidal_triple(const Graph& g);  // empty if none

// All maximal cliques (Bron-Kerbosch), each sorted, lexicographically ordered.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

}  // namespace pcaepg
