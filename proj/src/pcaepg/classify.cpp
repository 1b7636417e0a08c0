#include "pcaepg/classify.hpp"

#include <algorithm>

namespace pcaepg {

std::string class_tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::pca: return "PCA";
        case ClassTag::interval: return "INTERVAL";
        case ClassTag::phca: return "PHCA";
        case ClassTag::b1epg: return "B1EPG";
        case ClassTag::b1epr: return "B1EPR";
    }
    return "?";
}

namespace {

using Tag = NamedFamily::Tag;

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraphError("classification requires a connected graph");
}

std::vector<NamedFamily> sort_finite(std::vector<NamedFamily> finite) {
    std::stable_sort(finite.begin(), finite.end(), [](const NamedFamily& a, const NamedFamily& b) {
        return family_order(a) < family_order(b);
    });
    return finite;
}

}  // namespace

std::vector<NamedFamily> theorem2_family(int host_n) {
    std::vector<NamedFamily> finite;
    for (int i = 1; i <= 6; ++i) finite.push_back({Tag::fig1, i, false});
    std::vector<NamedFamily> out = sort_finite(std::move(finite));
    for (int n = 0; n + 5 <= host_n; ++n) out.push_back({Tag::cycle_union_k1, n, false});
    for (int n = 0; 2 * n + 4 <= host_n; ++n) out.push_back({Tag::co_odd_cycle_union_k1, n, false});
    for (int n = 0; 2 * n + 6 <= host_n; ++n) out.push_back({Tag::co_even_cycle, n, false});
    return out;
}

std::vector<NamedFamily> theorem3_family(int host_n) {
    std::vector<NamedFamily> finite;
    for (int i = 1; i <= 8; ++i) {
        finite.push_back({Tag::fig2, i, false});
        if (i == 5) finite.push_back({Tag::fig2, 5, true});  // both serpentine variants
    }
    std::vector<NamedFamily> out = sort_finite(std::move(finite));
    for (int k = 2; 4 * k - 1 <= host_n; ++k) out.push_back({Tag::power_cycle, k, false});
    return out;
}

std::vector<NamedFamily> corollary2_family(int host_n) {
    std::vector<NamedFamily> out{{Tag::wheel, 4, false}, {Tag::sun3, 0, false}};
    for (int k = 2; 4 * k - 1 <= host_n; ++k) out.push_back({Tag::power_cycle, k, false});
    return out;
}

Verdict is_pca(const Graph& g) {
    require_connected(g);
    Verdict v;
    v.tag = ClassTag::pca;
    v.forbidden = first_forbidden(g, theorem2_family(g.n()));
    v.yes = !v.forbidden.has_value();
    return v;
}

Verdict is_interval(const Graph& g) {
    require_connected(g);
    Verdict v;
    v.tag = ClassTag::interval;
    if (!is_chordal(g)) {
        // certificate: the shortest chordless cycle of length >= 4
        for (int m = 4; m <= g.n(); ++m) {
            if (auto e = find_induced(g, named_graph({Tag::cycle, m, false}))) {
                v.forbidden = FamilyHit{{Tag::cycle, m, false}, *e};
                break;
            }
        }
        v.yes = false;
        return v;
    }
    auto at = find_asteroidal_triple(g);
    if (!at.empty()) {
        v.asteroidal_triple = at;
        v.yes = false;
        return v;
    }
    v.yes = true;
    return v;
}

Verdict is_phca(const Graph& g) {
    Verdict pca = is_pca(g);
    if (!pca.yes) {
        pca.tag = ClassTag::phca;
        return pca;
    }
    Verdict v;
    v.tag = ClassTag::phca;
    std::vector<NamedFamily> fam{{Tag::wheel, 4, false}, {Tag::sun3, 0, false}};
    v.forbidden = first_forbidden(g, fam);
    v.yes = !v.forbidden.has_value();
    return v;
}

namespace {

Verdict scan_within_pca(const Graph& g, ClassTag tag, const std::vector<NamedFamily>& family,
                        const char* name) {
    Verdict pca = is_pca(g);
    if (!pca.yes)
        throw PreconditionError(std::string(name) + " requires a PCA graph (Theorem precondition)", pca);
    Verdict v;
    v.tag = tag;
    v.forbidden = first_forbidden(g, family);
    v.yes = !v.forbidden.has_value();
    return v;
}

}  // namespace

Verdict classify_b1_epg(const Graph& g) {
    return scan_within_pca(g, ClassTag::b1epg, theorem3_family(g.n()), "classify_b1_epg");
}

Verdict classify_b1_epr(const Graph& g) {
    return scan_within_pca(g, ClassTag::b1epr, corollary2_family(g.n()), "classify_b1_epr");
}

}  // namespace pcaepg
