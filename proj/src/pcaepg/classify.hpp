#pragma once

#include <optional>
#include <string>

#include "pcaepg/iso.hpp"

namespace pcaepg {

enum class ClassTag { pca, interval, phca, b1epg, b1epr };

std::string class_tag_name(ClassTag t);

// Classification outcome with certificate.  NO verdicts from the family scans
// carry the forbidden pattern and its embedding; a NO from the interval test
// carries either a chordless-cycle embedding or an asteroidal triple.
struct Verdict {
    bool yes = false;
    ClassTag tag = ClassTag::pca;
    std::optional<FamilyHit> forbidden;
    std::optional<std::vector<int>> asteroidal_triple;
};

// Raised when a classify operation's precondition fails (non-PCA input to the
// Theorem-3 / Corollary-2 tests); carries the is_pca certificate.
struct PreconditionError : std::runtime_error {
    PreconditionError(const std::string& msg, Verdict v)
        : std::runtime_error(msg), pca_verdict(std::move(v)) {}
    Verdict pca_verdict;
};

// Forbidden families, instantiated up to host_n vertices, in scan order:
// finite members ascending by vertex count (ties by family index), then the
// infinite families in declaration order with ascending parameter.
std::vector<NamedFamily> theorem2_family(int host_n);   // PCA obstructions
std::vector<NamedFamily> theorem3_family(int host_n);   // B1-EPG obstructions within PCA
std::vector<NamedFamily> corollary2_family(int host_n); // B1-EPR obstructions within PCA

// All inputs must be connected; DisconnectedGraphError otherwise.
Verdict is_pca(const Graph& g);
Verdict is_interval(const Graph& g);
Verdict is_phca(const Graph& g);
Verdict classify_b1_epg(const Graph& g);  // PreconditionError if not PCA
Verdict classify_b1_epr(const Graph& g);  // PreconditionError if not PCA

}  // namespace pcaepg
