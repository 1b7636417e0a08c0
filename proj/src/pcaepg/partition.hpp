#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcaepg/graph.hpp"

namespace pcaepg {

// Induced 4-wheel: rim is a chordless 4-cycle in cyclic order
// (rim[i] ~ rim[i+1], rim[i] !~ rim[i+2]); center adjacent to all rim vertices.
struct WheelWitness {
    int center = -1;
    std::array<int, 4> rim{};
};

// Partition lemma violation: which structural fact failed and on what pair.
struct StructuralError : std::runtime_error {
    StructuralError(const std::string& msg, std::pair<int, int> pair)
        : std::runtime_error(msg), witness(pair) {}
    std::pair<int, int> witness;
};

// Vertex decomposition around the rim 4-cycle C' = (rim[0..3]):
//   side[s]   = vertices adjacent to exactly {rim[s], rim[s+1]}
//   triple[j] = vertices adjacent to exactly {rim[j-1], rim[j], rim[j+1]}
//   center    = vertices adjacent to all four rim vertices
// (indices mod 4; the wheel center lands in `center`)
struct ASetPartition {
    WheelWitness w;
    std::array<std::vector<int>, 4> side;
    std::array<std::vector<int>, 4> triple;
    std::vector<int> center;
};

// All induced 4-wheels, lexicographic by (center, rim tuple); rim starts at
// its smallest vertex and runs toward the smaller neighbour.
std::vector<WheelWitness> all_w4_witnesses(const Graph& g);
std::optional<WheelWitness> find_first_w4(const Graph& g);

bool wheel_witness_valid(const Graph& g, const WheelWitness& w);

// A 3-clique containing the wheel center that dominates g; scans
// {center, u, v} with u, v adjacent on the rim first, then all triangles.
std::vector<int> dominating_triangle_from_w4(const Graph& g, const WheelWitness& w);

// Classifies every off-rim vertex into its A-set and verifies the structural
// lemmas (each side/triple a clique, triples complete to the center set,
// consecutive triples complete, opposite triples anticomplete, sides
// anticomplete to the non-incident triples and to each other, sides complete
// to their incident triples).  StructuralError on any violation.
ASetPartition partition_around_c4(const Graph& g, const WheelWitness& w);

}  // namespace pcaepg
