#include "pcaepg/named_graphs.hpp"

#include <algorithm>
#include <cctype>

namespace pcaepg {

namespace {

Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph path(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph wheel(int k) {
    if (k < 3) throw GraphError("wheel needs k >= 3");
    EdgeList e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(i, k);
    }
    return Graph(k + 1, e);
}

// Clique k_0,k_1,k_2 = 0,1,2; independent s_0,s_1,s_2 = 3,4,5; s_i ~ k_i, k_{i+1}.
Graph sun3() {
    EdgeList e{{0, 1}, {0, 2}, {1, 2}};
    for (int i = 0; i < 3; ++i) {
        e.emplace_back(3 + i, i);
        e.emplace_back(3 + i, (i + 1) % 3);
    }
    return Graph(6, e);
}

Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Fig. 1 transcriptions (vertex letters a..g mapped to 0..6 in drawing order).
Graph fig1(int i) {
    switch (i) {
        case 1:
            // 3-sun plus an isolated vertex.
            return disjoint_union(sun3(), Graph(1, {}));
        case 2:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {1, 5},
                             {2, 3}, {2, 6}, {3, 4}, {3, 6}, {4, 5}});
        case 3:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                             {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
        case 4:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4},
                             {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {5, 6}});
        case 5:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {1, 4},
                             {1, 5}, {2, 3}, {2, 6}, {3, 4}, {3, 6}, {4, 5}});
        case 6:
            // net: triangle 0,1,2 with pendants 4-0, 5-1, 3-2
            return Graph(6, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 5}, {2, 3}});
        default:
            throw GraphError("G_i index out of range (1..6)");
    }
}

// Fig. 2 transcriptions.
Graph fig2(int i, bool serpentine) {
    switch (i) {
        case 1:
            return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4},
                             {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
        case 2:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 4},
                             {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}});
        case 3:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                             {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                             {3, 4}, {3, 6}, {4, 5}, {5, 6}});
        case 4:
            return Graph(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                             {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                             {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 5}, {4, 6}});
        case 5: {
            EdgeList e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}, {1, 6},
                       {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}};
            if (serpentine) e.emplace_back(0, 6);
            return Graph(7, e);
        }
        case 6:
            return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7},
                             {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                             {2, 3}, {2, 5}, {2, 7}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}});
        case 7:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 4},
                             {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
        case 8:
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {1, 4},
                             {2, 3}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}});
        default:
            throw GraphError("H_i index out of range (1..8)");
    }
}

}  // namespace

int family_order(const NamedFamily& f) {
    using Tag = NamedFamily::Tag;
    switch (f.tag) {
        case Tag::cycle:
        case Tag::complete:
        case Tag::path: return f.param;
        case Tag::wheel: return f.param + 1;
        case Tag::sun3: return 6;
        case Tag::claw: return 4;
        case Tag::fig1: return f.param == 6 ? 6 : 7;
        case Tag::fig2: return f.param == 1 ? 6 : (f.param == 6 ? 8 : 7);
        case Tag::power_cycle: return 4 * f.param - 1;
        case Tag::cycle_union_k1: return f.param + 5;
        case Tag::co_odd_cycle_union_k1: return 2 * f.param + 4;
        case Tag::co_even_cycle: return 2 * f.param + 6;
    }
    throw GraphError("unknown family tag");
}

Graph named_graph(const NamedFamily& f) {
    using Tag = NamedFamily::Tag;
    switch (f.tag) {
        case Tag::cycle: return cycle(f.param);
        case Tag::complete: return complete(f.param);
        case Tag::path: return path(f.param);
        case Tag::wheel: return wheel(f.param);
        case Tag::sun3: return sun3();
        case Tag::claw: return claw();
        case Tag::fig1: return fig1(f.param);
        case Tag::fig2: return fig2(f.param, f.serpentine);
        case Tag::power_cycle:
            if (f.param < 2) throw GraphError("power cycle needs k >= 2");
            return graph_power(cycle(4 * f.param - 1), f.param);
        case Tag::cycle_union_k1:
            if (f.param < 0) throw GraphError("cycle_union_k1 needs n >= 0");
            return disjoint_union(cycle(f.param + 4), Graph(1, {}));
        case Tag::co_odd_cycle_union_k1:
            if (f.param < 0) throw GraphError("co_odd_cycle_union_k1 needs n >= 0");
            return complement(disjoint_union(cycle(2 * f.param + 3), Graph(1, {})));
        case Tag::co_even_cycle:
            if (f.param < 0) throw GraphError("co_even_cycle needs n >= 0");
            return complement(cycle(2 * f.param + 6));
    }
    throw GraphError("unknown family tag");
}

std::string NamedFamily::name() const {
    using Tag = NamedFamily::Tag;
    switch (tag) {
        case Tag::cycle: return "C" + std::to_string(param);
        case Tag::complete: return "K" + std::to_string(param);
        case Tag::path: return "P" + std::to_string(param);
        case Tag::wheel: return "W" + std::to_string(param);
        case Tag::sun3: return "S3";
        case Tag::claw: return "claw";
        case Tag::fig1: return "G" + std::to_string(param);
        case Tag::fig2:
            if (param == 5) return serpentine ? "H5s" : "H5";
            return "H" + std::to_string(param);
        case Tag::power_cycle:
            return "C" + std::to_string(4 * param - 1) + "^" + std::to_string(param);
        case Tag::cycle_union_k1:
            return "C" + std::to_string(param + 4) + "+K1";
        case Tag::co_odd_cycle_union_k1:
            return "co(C" + std::to_string(2 * param + 3) + "+K1)";
        case Tag::co_even_cycle:
            return "coC" + std::to_string(2 * param + 6);
    }
    return "?";
}

std::optional<NamedFamily> parse_family(std::string_view text, int param, bool serpentine) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    using Tag = NamedFamily::Tag;

    auto numbered = [&](char prefix, Tag tag) -> std::optional<NamedFamily> {
        if (t.size() < 2 || t[0] != prefix) return std::nullopt;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
        return NamedFamily{tag, std::stoi(t.substr(1)), false};
    };

    if (t == "sun3" || t == "s3") return NamedFamily{Tag::sun3, 0, false};
    if (t == "claw") return NamedFamily{Tag::claw, 0, false};
    if (t == "cycle") return NamedFamily{Tag::cycle, param, false};
    if (t == "complete") return NamedFamily{Tag::complete, param, false};
    if (t == "path") return NamedFamily{Tag::path, param, false};
    if (t == "wheel") return NamedFamily{Tag::wheel, param, false};
    if (t == "powercycle") return NamedFamily{Tag::power_cycle, param, false};
    if (t == "cycleunionk1") return NamedFamily{Tag::cycle_union_k1, param, false};
    if (t == "cooddcycleunionk1") return NamedFamily{Tag::co_odd_cycle_union_k1, param, false};
    if (t == "coevencycle") return NamedFamily{Tag::co_even_cycle, param, false};
    if (t == "h5s") return NamedFamily{Tag::fig2, 5, true};
    if (t.size() == 2 && t[0] == 'g' && t[1] >= '1' && t[1] <= '6')
        return NamedFamily{Tag::fig1, t[1] - '0', false};
    if (t.size() == 2 && t[0] == 'h' && t[1] >= '1' && t[1] <= '8')
        return NamedFamily{Tag::fig2, t[1] - '0', serpentine};
    if (auto f = numbered('c', Tag::cycle)) return f;
    if (auto f = numbered('k', Tag::complete)) return f;
    if (auto f = numbered('p', Tag::path)) return f;
    if (auto f = numbered('w', Tag::wheel)) return f;
    return std::nullopt;
}

}  // namespace pcaepg
