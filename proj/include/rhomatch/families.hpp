#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhomatch/graph.hpp"

namespace rhomatch {

// Shape of a split-like family: a dominating clique of size s joined to a
// disjoint union of cliques whose orders are listed non-increasing.
struct PartitionSpec {
    int s = 1;
    std::vector<int> parts;

    int order() const {
        return s + std::accumulate(parts.begin(), parts.end(), 0);
    }

    void validate() const {
        if (s < 1) throw std::invalid_argument("PartitionSpec: clique size s must be >= 1");
        if (parts.empty()) throw std::invalid_argument("PartitionSpec: at least one part required");
        int prev = 1 << 30;
        for (int p : parts) {
            if (p < 1) throw std::invalid_argument("PartitionSpec: parts must be >= 1");
            if (p > prev) throw std::invalid_argument("PartitionSpec: parts must be non-increasing");
            prev = p;
        }
    }

    std::string describe() const {
        std::string out = "s=" + std::to_string(s) + " parts=[";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        out += "]";
        return out;
    }
};

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty()) throw std::invalid_argument("disjoint_union: needs at least one graph");
    int n = 0;
    for (const Graph& g : gs) n += g.order();
    Graph out(n);
    int base = 0;
    for (const Graph& g : gs) {
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) out.add_edge(base + u, base + v);
        base += g.order();
    }
    return out;
}

// Join: every vertex of g adjacent to every vertex of h.
inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union({g, h});
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

// K_s joined to (K_{p1} u K_{p2} u ...), clique first in the labeling.
inline Graph split_family(const PartitionSpec& spec) {
    spec.validate();
    std::vector<Graph> pieces;
    pieces.reserve(spec.parts.size());
    for (int p : spec.parts) pieces.push_back(complete_graph(p));
    return join(complete_graph(spec.s), disjoint_union(pieces));
}

// K_s joined to (K_{n-2s-1} u (s+1) K_1): the candidate that realizes the
// certification threshold at its maximizing s.
inline Graph extremal_candidate(int n, int s) {
    if (s < 1) throw std::invalid_argument("extremal_candidate: s must be >= 1");
    if (n < 2 * s + 2)
        throw std::invalid_argument("extremal_candidate: order must be at least 2s+2");
    PartitionSpec spec;
    spec.s = s;
    spec.parts.assign(1, n - 2 * s - 1);
    spec.parts.insert(spec.parts.end(), s + 1, 1);
    if (spec.parts[0] < 1) throw std::invalid_argument("extremal_candidate: empty big part");
    return split_family(spec);
}

// The s=1 candidate K_1 joined to (K_{n-3} u 2 K_1); the only graph excepted
// from the certification guarantee.
inline Graph extremal_graph(int n) {
    if (n < 4) throw std::invalid_argument("extremal_graph: order must be at least 4");
    return extremal_candidate(n, 1);
}

}  // namespace rhomatch
