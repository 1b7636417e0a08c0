#pragma once

#include <vector>

#include "pcaepg/graph.hpp"

namespace pcaepg {

// Canonical form: the lexicographically smallest upper-triangle bit string of
// the adjacency matrix over all vertex relabelings.  Usable up to n = 8.
std::uint64_t canonical_key(const Graph& g);

// All unlabeled graphs on exactly n vertices (canonical representatives),
// built by vertex augmentation.  n <= 7.
std::vector<Graph> all_graphs(int n);

// The connected ones, in canonical-key order.
std::vector<Graph> connected_graphs(int n);

}  // namespace pcaepg
