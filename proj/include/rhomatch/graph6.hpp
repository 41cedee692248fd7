#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rhomatch/graph.hpp"

namespace rhomatch {

// Parse/serialize failure; offset is the byte position inside the input.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6: one length byte n+63 (orders 1..62), then the upper triangle in
// column-major order packed into 6-bit groups, each offset by 63.
inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty string", 0);
    const unsigned head = static_cast<unsigned char>(text[0]);
    if (head == 126) throw Graph6Error("graph6: extended length form (order > 62) not supported", 0);
    if (head < 63 || head > 125) throw Graph6Error("graph6: invalid length byte", 0);
    const int n = static_cast<int>(head) - 63;
    if (n == 0) throw Graph6Error("graph6: order 0 not supported", 0);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes) throw Graph6Error("graph6: truncated edge data", text.size());
    if (text.size() > 1 + nbytes) throw Graph6Error("graph6: trailing bytes after edge data", 1 + nbytes);
    for (std::size_t k = 1; k < text.size(); ++k) {
        unsigned c = static_cast<unsigned char>(text[k]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside printable range 63..126", k);
    }
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned c = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
            if ((c >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    }
    for (; bit < nbytes * 6; ++bit) {
        unsigned c = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
        if ((c >> (5 - bit % 6)) & 1u)
            throw Graph6Error("graph6: nonzero padding bits", 1 + bit / 6);
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("to_graph6: order > 62 not supported");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) out[1 + bit / 6] += char(1u << (5 - bit % 6));
        }
    }
    return out;
}

}  // namespace rhomatch
