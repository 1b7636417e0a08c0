#include "pcaepg/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pcaepg {

Graph read_adjacency(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw FormatError("adjacency header: expected \"n m\"");
    if (n < 1) throw FormatError("adjacency header: n must be >= 1");
    if (m < 0) throw FormatError("adjacency header: m must be >= 0");
    EdgeList edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw FormatError("adjacency body: expected " + std::to_string(m) + " edge lines");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, edges);
    } catch (const GraphError& e) {
        throw FormatError(std::string("bad adjacency input: ") + e.what());
    }
}

void write_adjacency(std::ostream& out, const Graph& g) {
    auto e = g.edges();
    out << g.n() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) out << u << ' ' << v << '\n';
}

Graph decode_graph6(const std::string& line) {
    if (line.empty()) throw FormatError("empty graph6 string");
    std::size_t pos = 0;
    if (line[0] == '>') {
        const std::string header = ">>graph6<<";
        if (line.rfind(header, 0) != 0) throw FormatError("bad graph6 header");
        pos = header.size();
    }
    if (pos >= line.size()) throw FormatError("empty graph6 string");
    int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw FormatError("graph6: bad order byte");
    if (c == 126) throw FormatError("graph6: n > 62 not supported");
    int n = c - 63;
    ++pos;
    if (n < 1) throw FormatError("graph6: n must be >= 1");
    int bits = n * (n - 1) / 2;
    int bytes = (bits + 5) / 6;
    if (static_cast<int>(line.size() - pos) < bytes) throw FormatError("graph6: truncated");
    EdgeList edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(line[pos + bit / 6]);
            if (byte < 63 || byte > 126) throw FormatError("graph6: bad data byte");
            if ((byte - 63) & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    if (g.n() > 62) throw FormatError("graph6: n > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int bits = g.n() * (g.n() - 1) / 2;
    int bytes = (bits + 5) / 6;
    std::string data(bytes, 0);
    int bit = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : data) c = static_cast<char>(c + 63);
    return out + data;
}

Graph read_graph(std::istream& in, const std::string& format) {
    if (format == "adj") return read_adjacency(in);
    if (format == "graph6") {
        std::string line;
        while (std::getline(in, line)) {
            // skip blank lines
            if (line.find_first_not_of(" \t\r") != std::string::npos) break;
        }
        if (line.empty()) throw FormatError("no graph6 line in input");
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
            line.pop_back();
        return decode_graph6(line);
    }
    throw FormatError("unknown graph format: " + format);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "adj") {
        write_adjacency(out, g);
    } else if (format == "graph6") {
        out << encode_graph6(g) << '\n';
    } else {
        throw FormatError("unknown graph format: " + format);
    }
}

}  // namespace pcaepg
