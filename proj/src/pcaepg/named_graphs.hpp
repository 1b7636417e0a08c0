#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pcaepg/graph.hpp"

namespace pcaepg {

// Tagged description of one member of the named graph families.
// Vertex numberings are a repo contract; see docs/named_graphs.md.
struct NamedFamily {
    enum class Tag {
        cycle,                   // C_n, param n >= 3
        complete,                // K_n, param n >= 1
        path,                    // P_n, param n >= 1
        wheel,                   // W_k, param k >= 3 (rim 0..k-1, center k)
        sun3,                    // S_3 (clique 0..2, independent 3..5)
        claw,                    // K_{1,3} (center 0)
        fig1,                    // G_i, param i in 1..6
        fig2,                    // H_i, param i in 1..8; serpentine applies to H_5
        power_cycle,             // C_{4k-1}^k, param k >= 2
        cycle_union_k1,          // C_{n+4} u K_1, param n >= 0
        co_odd_cycle_union_k1,   // co-(C_{2n+3} u K_1), param n >= 0 (n=0 is the claw)
        co_even_cycle,           // co-C_{2n+6}, param n >= 0
    };

    Tag tag;
    int param = 0;
    bool serpentine = false;

    std::string name() const;
    bool operator==(const NamedFamily&) const = default;
};

// Number of vertices of named_graph(f), without building it.
int family_order(const NamedFamily& f);

Graph named_graph(const NamedFamily& f);

// Accepts the CLI spellings: c5/C5, k4, p3, w4/wheel, s3/sun3, claw, g1..g6,
// h1..h8 (h5s for the serpentine variant), powercycle, cycleunionk1,
// cooddcycleunionk1, coevencycle.  Families with a parameter either embed it
// (c5) or take it separately (--param).
std::optional<NamedFamily> parse_family(std::string_view text, int param, bool serpentine);

}  // namespace pcaepg
