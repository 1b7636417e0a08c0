#pragma once

#include <iosfwd>
#include <string>

#include "pcaepg/graph.hpp"

namespace pcaepg {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adjacency-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_adjacency(std::istream& in);
void write_adjacency(std::ostream& out, const Graph& g);

// graph6 format (one graph per string, n <= 62).
Graph decode_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

// format = "adj" or "graph6"
Graph read_graph(std::istream& in, const std::string& format);
void write_graph(std::ostream& out, const Graph& g, const std::string& format);

}  // namespace pcaepg
