#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rhomatch {

// Simple undirected graph on vertices 0..n-1; adjacency kept as one packed
// bit row per vertex so degree/neighborhood queries are word operations.
class Graph {
public:
    explicit Graph(int n)
        : n_(n), words_(n > 0 ? (n + 63) / 64 : 0), bits_(static_cast<std::size_t>(n_) * words_, 0) {
        if (n < 1) throw std::invalid_argument("Graph: order must be at least 1");
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return (bits_[row(u) + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        bits_[row(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[row(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    int degree(int v) const {
        check(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row(v) + w]);
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<int> neighbors(int v) const {
        check(v);
        std::vector<int> out;
        out.reserve(8);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsw = bits_[row(v) + w];
            while (bitsw) {
                out.push_back(64 * w + std::countr_zero(bitsw));
                bitsw &= bitsw - 1;
            }
        }
        return out;
    }

    // First adjacency word; covers the whole row when order() <= 64.
    std::uint64_t row_word(int v) const {
        check(v);
        return bits_[row(v)];
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::size_t row(int v) const { return static_cast<std::size_t>(v) * words_; }
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

inline bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 1) return true;
    if (n <= 64) {
        std::uint64_t seen = 1, frontier = 1;
        const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.row_word(v);
            }
            frontier = next & ~seen;
            seen |= frontier;
            if (seen == all) return true;
        }
        return false;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

}  // namespace rhomatch
