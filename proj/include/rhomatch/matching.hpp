#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rhomatch/graph.hpp"

namespace rhomatch {

// Perfect matching decision by subset DP over vertex masks.  Exponential
// memory bounds it to n <= 24; odd-popcount states are skipped since no
// partial matching covers them.
inline bool has_perfect_matching_dp(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("has_perfect_matching_dp: order must be <= 24");
    if (n % 2 != 0) return false;
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<char> can(std::size_t{1} << n, 0);
    can[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        const int v = std::countr_zero(mask);
        std::uint32_t partners = adj[v] & mask;
        while (partners) {
            const int u = std::countr_zero(partners);
            partners &= partners - 1;
            if (can[mask ^ (std::uint32_t{1} << v) ^ (std::uint32_t{1} << u)]) {
                can[mask] = 1;
                break;
            }
        }
    }
    return can[full] != 0;
}

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges;  // (u,v) with u < v, sorted
    bool perfect = false;
};

// Maximum matching by augmenting paths with blossom contraction.  Neighbor
// lists and root order are ascending, so the returned matching is a
// deterministic function of the input labeling.
inline MatchingResult max_matching(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<char> used(n, 0), blossom(n, 0);
    std::vector<int> queue;

    auto lowest_common_base = [&](int a, int b) {
        std::vector<char> anc(n, 0);
        int v = a;
        for (;;) {
            v = base[v];
            anc[v] = 1;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        v = b;
        for (;;) {
            v = base[v];
            if (anc[v]) return v;
            v = parent[match[v]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };

    auto find_augmenting = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        queue.clear();
        queue.push_back(root);
        used[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom down to the common base
                    const int cur = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    };

    for (int root = 0; root < n; ++root) {
        if (match[root] != -1) continue;
        int v = find_augmenting(root);
        while (v != -1) {
            const int pv = parent[v];
            const int next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    MatchingResult out;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) out.edges.emplace_back(v, match[v]);
    out.size = static_cast<int>(out.edges.size());
    out.perfect = (n % 2 == 0) && out.size * 2 == n;
    return out;
}

namespace detail {

inline int odd_components_masked(const std::uint32_t* adj, std::uint32_t left) {
    int odd = 0;
    while (left) {
        const int start = std::countr_zero(left);
        std::uint32_t comp = std::uint32_t{1} << start;
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & left;
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        if (std::popcount(comp) % 2 != 0) ++odd;
        left &= ~comp;
    }
    return odd;
}

inline std::vector<std::uint32_t> adjacency_words(const Graph& g) {
    const int n = g.order();
    if (n > 32) throw std::invalid_argument("adjacency_words: order must be <= 32");
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
    return adj;
}

}  // namespace detail

// Number of odd components of g - removed (vertices in `removed` deleted).
inline int odd_components_without(const Graph& g, std::uint32_t removed) {
    const int n = g.order();
    const std::vector<std::uint32_t> adj = detail::adjacency_words(g);
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return detail::odd_components_masked(adj.data(), all & ~removed);
}

struct TutteWitness {
    std::vector<int> vertices;  // the deleted set S
    int odd_components = 0;     // odd components of G - S, > |S|
};

// Smallest vertex set S with more than |S| odd components in G - S; such a
// set certifies that no perfect matching exists.  Subsets are scanned in
// increasing size, then increasing numeric mask, so the witness is
// deterministic.  Exhaustive, hence capped at n <= 20.
inline std::optional<TutteWitness> tutte_witness(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("tutte_witness: order must be <= 20");
    const std::vector<std::uint32_t> adj = detail::adjacency_words(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (int k = 0; k <= n; ++k) {
        std::uint32_t mask = k == 0 ? 0 : (std::uint32_t{1} << k) - 1;
        for (;;) {
            const int odd = detail::odd_components_masked(adj.data(), full & ~mask);
            if (odd > k) {
                TutteWitness w;
                w.odd_components = odd;
                for (std::uint32_t m = mask; m; m &= m - 1) w.vertices.push_back(std::countr_zero(m));
                return w;
            }
            if (k == 0) break;
            // Gosper's hack: next k-subset in numeric order
            const std::uint32_t c = mask & -mask;
            const std::uint32_t r = mask + c;
            if (r > full) break;
            mask = (((mask ^ r) >> 2) / c) | r;
            if (mask > full) break;
        }
    }
    return std::nullopt;
}

}  // namespace rhomatch
