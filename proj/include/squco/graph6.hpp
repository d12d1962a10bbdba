#pragma once

// graph6 text encoding: a size header followed by the upper triangle of the
// adjacency matrix in column order, six bits per printable byte.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "squco/graph.hpp"

namespace squco {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (bits::test(g.row(i), j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    // Tolerate one trailing line terminator.
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);

    auto sextet = [&](std::size_t pos) -> std::size_t {
        if (pos >= text.size()) throw ParseError(pos, "truncated record");
        auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError(pos, "byte " + std::to_string(c) + " outside 63..126");
        return c - 63;
    };

    if (text.empty()) throw ParseError(0, "empty record");
    if (text[0] == ':' || text[0] == ';') throw ParseError(0, "sparse6/incremental records are not supported");
    if (text[0] == '&') throw ParseError(0, "digraph6 records are not supported");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = sextet(0);
        pos = 1;
    } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
        for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | sextet(k);
        if (n <= 258047) throw ParseError(2, "non-minimal 8-byte size header");
        pos = 8;
    } else {
        for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | sextet(k);
        if (n <= 62) throw ParseError(1, "non-minimal 4-byte size header");
        pos = 4;
    }

    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < pos + nbytes)
        throw ParseError(text.size(), "truncated bit payload: expected " + std::to_string(nbytes) +
                                          " bytes after header");
    if (text.size() > pos + nbytes) throw ParseError(pos + nbytes, "trailing garbage");

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t byte = pos + k / 6;
            if ((sextet(byte) >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (nbits % 6 != 0) {
        const std::size_t last = pos + nbytes - 1;
        const std::size_t pad = 6 - nbits % 6;
        if (sextet(last) & ((1u << pad) - 1)) throw ParseError(last, "nonzero padding bits");
    }
    return g;
}

}  // namespace squco
