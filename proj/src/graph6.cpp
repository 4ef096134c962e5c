#include "pt/graph6.hpp"

#include <fstream>

namespace pt {

namespace {
constexpr int kMaxN = 258047;
}

std::string encode_graph6(const Graph& g) {
    if (g.n > kMaxN) throw std::invalid_argument("encode_graph6: n too large");
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > s.size())
            throw Graph6ParseError("decode_graph6: truncated input", s.size());
    };
    auto val = [&](std::size_t off) {
        unsigned char c = static_cast<unsigned char>(s[off]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("decode_graph6: invalid character", off);
        return static_cast<int>(c - 63);
    };
    need(1);
    long long n;
    if (s[0] == '~') {
        need(4);
        if (s[1] == '~')
            throw Graph6ParseError("decode_graph6: 8-byte sizes unsupported", 1);
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    std::vector<Edge> edges;
    int acc = 0, nbits = 0;
    std::size_t at = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                need(1);
                at = pos;
                acc = val(pos++);
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw Graph6ParseError("decode_graph6: nonzero padding bits", at);
    if (pos != s.size())
        throw Graph6ParseError("decode_graph6: trailing bytes", pos);
    return build_graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(decode_graph6(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& l : lines) out << l << "\n";
}

}  // namespace pt
