#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rhomatch/eigen.hpp"
#include "rhomatch/families.hpp"
#include "rhomatch/graph.hpp"
#include "rhomatch/symmatrix.hpp"
#include "rhomatch/thresholds.hpp"

namespace rhomatch {

// Quotient of A_alpha on an equitable partition.  Generally non-symmetric,
// but diagonally similar to a symmetric matrix (scale by sqrt of block
// sizes), so the spectrum is real and is computed on that symmetrization.
struct QuotientMatrix {
    int dim = 0;
    std::vector<double> entries;  // row-major
    std::vector<int> block_sizes;

    double operator()(int i, int j) const {
        if (i < 0 || i >= dim || j < 0 || j >= dim)
            throw std::out_of_range("QuotientMatrix: index out of range");
        return entries[static_cast<std::size_t>(i) * dim + j];
    }

    SymMatrix symmetrized() const {
        SymMatrix s(dim);
        for (int i = 0; i < dim; ++i) {
            s.set(i, i, (*this)(i, i));
            for (int j = i + 1; j < dim; ++j) {
                const double a = (*this)(i, j), b = (*this)(j, i);
                if ((a == 0.0) != (b == 0.0) || a * b < 0.0)
                    throw std::invalid_argument("QuotientMatrix: not symmetrizable");
                s.set(i, j, std::sqrt(a * b));
            }
        }
        return s;
    }

    std::vector<double> eigenvalues() const { return full_spectrum(symmetrized()); }

    double spectral_radius() const { return eigenvalues().front(); }

    CubicPoly charpoly() const {
        if (dim != 3) throw std::invalid_argument("QuotientMatrix: charpoly needs dim 3");
        auto& m = *this;
        CubicPoly p;
        p.c2 = -(m(0, 0) + m(1, 1) + m(2, 2));
        p.c1 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
               m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        p.c0 = -(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                 m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                 m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
        return p;
    }
};

// (q+1)-block quotient of the split family: the clique block first, then one
// block per part.
inline QuotientMatrix split_quotient(const PartitionSpec& spec, double alpha) {
    spec.validate();
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("split_quotient: alpha must lie in [0,1)");
    const int q = static_cast<int>(spec.parts.size());
    const double s = spec.s, n = spec.order();
    QuotientMatrix m;
    m.dim = q + 1;
    m.entries.assign(static_cast<std::size_t>(m.dim) * m.dim, 0.0);
    m.block_sizes.assign(1, spec.s);
    auto at = [&](int i, int j) -> double& {
        return m.entries[static_cast<std::size_t>(i) * m.dim + j];
    };
    at(0, 0) = n * alpha - s * alpha + s - 1.0;
    for (int j = 0; j < q; ++j) {
        const double nj = spec.parts[j];
        m.block_sizes.push_back(spec.parts[j]);
        at(0, j + 1) = nj * (1.0 - alpha);
        at(j + 1, 0) = s * (1.0 - alpha);
        at(j + 1, j + 1) = s * alpha + nj - 1.0;
    }
    return m;
}

// 3-block quotient of K_s \/ (K_{n-2s-1} u (s+1)K_1): clique, big part,
// merged singletons.
inline QuotientMatrix candidate_quotient(int n, int s, double alpha) {
    if (s < 1 || n < 2 * s + 2)
        throw std::invalid_argument("candidate_quotient: need 1 <= s <= n/2 - 1");
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("candidate_quotient: alpha must lie in [0,1)");
    const double t = s, m = n;
    QuotientMatrix out;
    out.dim = 3;
    out.block_sizes = {s, n - 2 * s - 1, s + 1};
    out.entries = {m * alpha - t * alpha + t - 1.0, (m - 2.0 * t - 1.0) * (1.0 - alpha),
                   (t + 1.0) * (1.0 - alpha),
                   t * (1.0 - alpha), m + t * alpha - 2.0 * t - 2.0, 0.0,
                   t * (1.0 - alpha), 0.0, t * alpha};
    return out;
}

// 3-block quotient of K_s \/ (K_{n-s-q+1} u (q-1)K_1): the shape every
// odd-part split family collapses to without lowering the radius.
inline QuotientMatrix collapsed_quotient(int n, int s, int q, double alpha) {
    if (s < 1 || q < 2 || n - s - q + 1 < 1)
        throw std::invalid_argument("collapsed_quotient: need s >= 1, q >= 2, n >= s + q");
    PartitionSpec spec;
    spec.s = s;
    spec.parts.assign(1, n - s - q + 1);
    spec.parts.insert(spec.parts.end(), q - 1, 1);
    spec.validate();
    QuotientMatrix full = split_quotient(spec, alpha);
    // merge the q-1 singleton blocks
    QuotientMatrix out;
    out.dim = 3;
    out.block_sizes = {s, n - s - q + 1, q - 1};
    out.entries = {full(0, 0), full(0, 1), (q - 1.0) * full(0, 2),
                   full(1, 0), full(1, 1), 0.0,
                   full(2, 0), 0.0, full(2, 2)};
    return out;
}

struct EquitableCheck {
    std::optional<QuotientMatrix> quotient;
    int violating_vertex = -1;
    int violating_block = -1;

    bool ok() const { return quotient.has_value(); }
};

// Checks whether blocks form an equitable partition of g; on success returns
// the A_alpha quotient, otherwise pinpoints a vertex whose neighbor count
// into some block deviates from its block's reference row.
inline EquitableCheck validate_equitable(const Graph& g, const std::vector<std::vector<int>>& blocks,
                                         double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("validate_equitable: alpha must lie in [0,1)");
    const int n = g.order();
    const int q = static_cast<int>(blocks.size());
    if (q == 0) throw std::invalid_argument("validate_equitable: empty partition");
    std::vector<int> owner(n, -1);
    for (int b = 0; b < q; ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("validate_equitable: empty block");
        for (int v : blocks[b]) {
            if (v < 0 || v >= n) throw std::invalid_argument("validate_equitable: vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("validate_equitable: vertex in two blocks");
            owner[v] = b;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("validate_equitable: vertex not covered");

    std::vector<std::vector<int>> ref(q);
    for (int b = 0; b < q; ++b) {
        for (std::size_t k = 0; k < blocks[b].size(); ++k) {
            const int v = blocks[b][k];
            std::vector<int> counts(q, 0);
            for (int u : g.neighbors(v)) ++counts[owner[u]];
            if (k == 0) {
                ref[b] = counts;
            } else {
                for (int j = 0; j < q; ++j)
                    if (counts[j] != ref[b][j]) return EquitableCheck{std::nullopt, v, j};
            }
        }
    }
    QuotientMatrix m;
    m.dim = q;
    m.entries.assign(static_cast<std::size_t>(q) * q, 0.0);
    for (int b = 0; b < q; ++b) {
        m.block_sizes.push_back(static_cast<int>(blocks[b].size()));
        int deg = 0;
        for (int j = 0; j < q; ++j) deg += ref[b][j];
        for (int j = 0; j < q; ++j)
            m.entries[static_cast<std::size_t>(b) * q + j] =
                (1.0 - alpha) * ref[b][j] + (b == j ? alpha * deg : 0.0);
    }
    return EquitableCheck{std::move(m), -1, -1};
}

}  // namespace rhomatch
