#include "pcaepg/iso.hpp"

namespace pcaepg {

namespace {

// Assign pattern vertices in id order; host candidates ascending, so the
// first complete assignment is the lexicographically least embedding.
bool extend(const Graph& host, const Graph& pattern, Embedding& map,
            std::uint64_t used, int p) {
    if (p == pattern.n()) return true;
    for (int h = 0; h < host.n(); ++h) {
        if ((used >> h) & 1u) continue;
        if (host.degree(h) < pattern.degree(p)) continue;
        bool ok = true;
        for (int q = 0; q < p && ok; ++q)
            if (pattern.adjacent(p, q) != host.adjacent(h, map[q])) ok = false;
        if (!ok) continue;
        map[p] = h;
        if (extend(host, pattern, map, used | (std::uint64_t{1} << h), p + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n() > host.n()) return std::nullopt;
    Embedding map(pattern.n(), -1);
    if (extend(host, pattern, map, 0, 0)) return map;
    return std::nullopt;
}

bool embedding_valid(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.size()) != pattern.n()) return false;
    std::uint64_t used = 0;
    for (int h : e) {
        if (h < 0 || h >= host.n()) return false;
        if ((used >> h) & 1u) return false;
        used |= std::uint64_t{1} << h;
    }
    for (int p = 0; p < pattern.n(); ++p)
        for (int q = p + 1; q < pattern.n(); ++q)
            if (pattern.adjacent(p, q) != host.adjacent(e[p], e[q])) return false;
    return true;
}

std::optional<FamilyHit> first_forbidden(const Graph& host, const std::vector<NamedFamily>& family) {
    for (const NamedFamily& f : family) {
        if (family_order(f) > host.n()) continue;
        if (auto e = find_induced(host, named_graph(f))) return FamilyHit{f, *e};
    }
    return std::nullopt;
}

}  // namespace pcaepg
