#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pt/graph.hpp"

namespace pt {

struct Graph6ParseError : std::runtime_error {
    std::size_t byte_offset;
    Graph6ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"),
          byte_offset(off) {}
};

// Standard graph6 encoding. Supports 0 <= n <= 258047 (one- and four-byte
// size prefixes). Bit order is the column-major upper triangle.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& s);

// One graph per line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<std::string>& lines);

}  // namespace pt
