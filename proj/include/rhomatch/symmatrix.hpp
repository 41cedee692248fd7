#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rhomatch/graph.hpp"

namespace rhomatch {

// Dense symmetric matrix; set() mirrors across the diagonal so the stored
// data can never go asymmetric.
class SymMatrix {
public:
    explicit SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
        if (dim < 1) throw std::invalid_argument("SymMatrix: dimension must be >= 1");
    }

    int dim() const { return dim_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim_; ++i) t += a_[idx(i, i)];
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    // y = M x
    void multiply(const double* x, double* y) const {
        for (int i = 0; i < dim_; ++i) {
            const double* row = a_.data() + static_cast<std::size_t>(i) * dim_;
            double acc = 0.0;
            for (int j = 0; j < dim_; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
    }

    const std::vector<double>& data() const { return a_; }

    bool nonnegative() const {
        for (double v : a_)
            if (v < 0.0) return false;
        return true;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw std::out_of_range("SymMatrix: index out of range");
        return static_cast<std::size_t>(i) * dim_ + j;
    }

    int dim_;
    std::vector<double> a_;
};

// A_alpha(G) = alpha D + (1 - alpha) A.
inline SymMatrix a_alpha(const Graph& g, double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("a_alpha: alpha must lie in [0,1)");
    const int n = g.order();
    SymMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m.set(v, v, alpha * g.degree(v));
        for (int u : g.neighbors(v))
            if (u > v) m.set(v, u, 1.0 - alpha);
    }
    return m;
}

}  // namespace rhomatch
