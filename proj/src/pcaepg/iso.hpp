#pragma once

#include <optional>
#include <vector>

#include "pcaepg/graph.hpp"
#include "pcaepg/named_graphs.hpp"

namespace pcaepg {

// embedding[p] = host vertex carrying pattern vertex p (injective, induced).
using Embedding = std::vector<int>;

// Lexicographically least induced embedding of pattern into host under
// vertex-id branch order, or nullopt.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

// Independent re-check: injectivity plus pairwise induced-adjacency equality.
bool embedding_valid(const Graph& host, const Graph& pattern, const Embedding& e);

struct FamilyHit {
    NamedFamily family;
    Embedding embedding;
};

// Scans the family members in list order, instantiating each only if it fits
// in the host (an m-vertex pattern cannot embed in a smaller host); returns
// the first hit.
std::optional<FamilyHit> first_forbidden(const Graph& host, const std::vector<NamedFamily>& family);

}  // namespace pcaepg
