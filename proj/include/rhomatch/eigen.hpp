#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rhomatch/graph.hpp"
#include "rhomatch/symmatrix.hpp"

namespace rhomatch {

struct SpectralResult {
    double radius = 0.0;
    std::vector<double> vector;  // unit Perron vector
    long iterations = 0;
    double residual = 0.0;
};

// Full symmetric eigensolve by cyclic Jacobi rotations; eigenvalues returned
// in decreasing order.  Quadratic convergence makes ~15 sweeps plenty for the
// dimensions used here (quotients and desk-scale graphs).
inline std::vector<double> full_spectrum(const SymMatrix& m) {
    const int n = m.dim();
    std::vector<double> a = m.data();
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    const double fro = m.frobenius_norm();
    const double tol = 1e-12 * std::max(fro, 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        if (std::sqrt(off) <= tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

// Largest eigenvalue of an entrywise-nonnegative symmetric matrix by power
// iteration on M + I (the shift keeps the iteration primitive, so it cannot
// stall on bipartite-like +/- eigenvalue pairs).  Falls back on the caller to
// use full_spectrum if it throws.
inline SpectralResult spectral_radius(const SymMatrix& m) {
    if (!m.nonnegative())
        throw std::invalid_argument("spectral_radius: matrix must be entrywise nonnegative");
    const int n = m.dim();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n);
    const double ray_tol = 1e-13;
    const double res_tol = 1e-12 * n;
    const long cap = std::max<long>(256, static_cast<long>(100.0 * n * std::log(n + 1.0)));
    double prev_ray = 0.0;
    for (long iter = 1; iter <= cap; ++iter) {
        m.multiply(v.data(), w.data());
        for (int i = 0; i < n; ++i) w[i] += v[i];
        double ray = 0.0;
        for (int i = 0; i < n; ++i) ray += v[i] * w[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(w[i] - ray * v[i]));
        const bool settled = iter > 1 && std::abs(ray - prev_ray) <= ray_tol * std::max(1.0, std::abs(ray));
        if (settled && res <= res_tol)
            return SpectralResult{ray - 1.0, v, iter, res};
        prev_ray = ray;
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0)  // only possible if M + I annihilates v, which nonnegativity forbids
            throw std::runtime_error("spectral_radius: zero iterate");
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

// Spectral radius of A_alpha(G); power iteration with a dense fallback for
// inputs whose eigenvalue gap stalls the iteration.
inline double rho_alpha(const Graph& g, double alpha) {
    SymMatrix m = a_alpha(g, alpha);
    try {
        return spectral_radius(m).radius;
    } catch (const std::runtime_error&) {
        return full_spectrum(m).front();
    }
}

}  // namespace rhomatch
