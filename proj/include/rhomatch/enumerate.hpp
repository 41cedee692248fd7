#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rhomatch/graph.hpp"

namespace rhomatch {

// Streams every labeled graph on n vertices (optionally connected only) by
// walking edge-subset masks in increasing numeric order.  Capped at n = 7,
// where the full stream is 2^21 graphs.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, bool connected_only = false)
        : n_(n), connected_only_(connected_only) {
        if (n < 1 || n > 7)
            throw std::invalid_argument("GraphEnumerator: order must be in 1..7");
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
        total_ = std::uint32_t{1} << pairs_.size();
    }

    std::uint64_t total_masks() const { return total_; }

    static Graph from_mask(int n, std::uint32_t mask) {
        Graph g(n);
        std::uint32_t rest = mask;
        int bit = 0;
        for (int j = 1; j < n && rest; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((rest >> bit) & 1u) {
                    g.add_edge(i, j);
                    rest &= ~(std::uint32_t{1} << bit);
                }
        return g;
    }

    std::optional<Graph> next() {
        while (mask_ < total_) {
            Graph g = from_mask(n_, static_cast<std::uint32_t>(mask_));
            ++mask_;
            if (!connected_only_ || is_connected(g)) return g;
        }
        return std::nullopt;
    }

private:
    int n_;
    bool connected_only_;
    std::vector<std::pair<int, int>> pairs_;
    std::uint64_t total_ = 0;
    std::uint64_t mask_ = 0;
};

}  // namespace rhomatch
