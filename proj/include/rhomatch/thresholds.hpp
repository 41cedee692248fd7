#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhomatch/families.hpp"
#include "rhomatch/format.hpp"

namespace rhomatch {

struct CubicPoly {
    double c3 = 1.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;

    double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double derivative(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }
};

// Monic cubic whose largest root is the certification threshold for
// even orders n: the A_alpha spectral radius of the s=1 extremal candidate.
inline CubicPoly threshold_cubic(int n, double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("threshold_cubic: alpha must lie in [0,1)");
    if (n < 4) throw std::invalid_argument("threshold_cubic: order must be at least 4");
    const double a = alpha, m = n;
    CubicPoly p;
    p.c2 = -((a + 1.0) * m + a - 4.0);
    p.c1 = a * m * m + (a * a - 2.0 * a - 1.0) * m - 2.0 * a + 1.0;
    p.c0 = -a * a * m * m + (5.0 * a * a - 3.0 * a + 2.0) * m - 10.0 * a * a + 15.0 * a - 8.0;
    return p;
}

// Characteristic polynomial of the 3-block quotient of the candidate
// K_s \/ (K_{n-2s-1} u (s+1)K_1); reduces to threshold_cubic at s=1.
inline CubicPoly candidate_charpoly(int n, int s, double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("candidate_charpoly: alpha must lie in [0,1)");
    if (s < 1 || n < 2 * s + 2)
        throw std::invalid_argument("candidate_charpoly: need 1 <= s <= n/2 - 1");
    const double a = alpha, m = n, t = s;
    CubicPoly p;
    p.c2 = 3.0 - a * m - t * (a - 1.0) - m;
    p.c1 = -(t * t - a * (a * m - 2.0) * t - (a * m - 1.0) * (m - 2.0));
    p.c0 = (3.0 * a - 2.0) * (1.0 - a) * t * t * t +
           (8.0 * a + m - 2.0 * a * m + 2.0 * a * a * m - 5.0 * a * a - 4.0) * t * t -
           (m - 2.0) * (a + a * a * m - a * a - 1.0) * t;
    return p;
}

// Characteristic polynomial of the (q+1)-block split-family quotient,
// evaluated at x.  The per-part products are expanded directly (never by
// dividing the full product) so evaluation stays finite at the interior
// eigenvalues x = s*alpha + n_j - 1, and the q+1 terms are Kahan-summed
// because they nearly cancel close to a root.
inline double split_charpoly_eval(const PartitionSpec& spec, double alpha, double x) {
    spec.validate();
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("split_charpoly_eval: alpha must lie in [0,1)");
    const int q = static_cast<int>(spec.parts.size());
    const double s = spec.s;
    const double n = spec.order();
    std::vector<double> t(q);
    for (int j = 0; j < q; ++j) t[j] = x - s * alpha - spec.parts[j] + 1.0;
    double lead = x - n * alpha + s * alpha - s + 1.0;
    for (double tj : t) lead *= tj;
    double sum = lead, comp = 0.0;
    const double w = -s * (1.0 - alpha) * (1.0 - alpha);
    for (int i = 0; i < q; ++i) {
        double term = w * spec.parts[i];
        for (int j = 0; j < q; ++j)
            if (j != i) term *= t[j];
        const double y = term - comp;
        const double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    }
    return sum;
}

// Largest real root of p inside [lo, hi].  The bracket is split at the
// critical points of p so every piece is monotone, then the rightmost piece
// with a sign change is bisected to width 1e-13 and Newton-polished.
inline double largest_real_root(const CubicPoly& p, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("largest_real_root: empty bracket");
    auto sgn = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    std::vector<double> knots{lo, hi};
    if (p.c3 != 0.0) {
        const double disc = 4.0 * p.c2 * p.c2 - 12.0 * p.c3 * p.c1;
        if (disc > 0.0) {
            const double r = std::sqrt(disc);
            for (double x : {(-2.0 * p.c2 - r) / (6.0 * p.c3), (-2.0 * p.c2 + r) / (6.0 * p.c3)})
                if (x > lo && x < hi) knots.push_back(x);
        }
    }
    std::sort(knots.begin(), knots.end());
    for (int k = static_cast<int>(knots.size()) - 2; k >= 0; --k) {
        double a = knots[k], b = knots[k + 1];
        const int sa = sgn(p(a)), sb = sgn(p(b));
        if (sb == 0) return b;
        if (sa == 0) return a;
        if (sa == sb) continue;
        double x0 = a, x1 = b;
        for (int it = 0; it < 200 && x1 - x0 > 1e-13; ++it) {
            const double mid = 0.5 * (x0 + x1);
            const int sm = sgn(p(mid));
            if (sm == 0) {
                x0 = x1 = mid;
                break;
            }
            (sm == sa ? x0 : x1) = mid;
        }
        double x = 0.5 * (x0 + x1);
        for (int it = 0; it < 4; ++it) {
            const double d = p.derivative(x);
            if (d == 0.0) break;
            const double nx = x - p(x) / d;
            if (!(nx >= a && nx <= b)) break;
            x = nx;
        }
        return x;
    }
    throw std::invalid_argument("largest_real_root: no sign change inside bracket");
}

// Smallest order for which the threshold certification is valid at this
// alpha; piecewise in alpha with a pole toward alpha = 1.
inline double min_theorem_order(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("min_theorem_order: alpha must lie in [0,1)");
    if (alpha <= 0.5) return 10.0;
    if (alpha <= 2.0 / 3.0) return 14.0;
    return 5.0 / (1.0 - alpha);
}

// Certification threshold: the largest root of threshold_cubic(n, alpha).
// Without force, rejects orders where the guarantee does not apply (odd n,
// or n below min_theorem_order).
inline double threshold(int n, double alpha, bool force = false) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("threshold: alpha must lie in [0,1)");
    if (n < 4) throw std::invalid_argument("threshold: order must be at least 4");
    if (!force) {
        if (n % 2 != 0)
            throw std::invalid_argument("threshold: odd order " + std::to_string(n) +
                                        " is outside the guarantee (pass force to evaluate anyway)");
        const double need = min_theorem_order(alpha);
        if (static_cast<double>(n) < need)
            throw std::invalid_argument("threshold: order " + std::to_string(n) +
                                        " is below the minimum " + format_real(need) +
                                        " for alpha=" + format_real(alpha) +
                                        " (pass force to evaluate anyway)");
    }
    const CubicPoly p = threshold_cubic(n, alpha);
    // The root always lies in (n-3, n-1): the candidate strictly contains
    // K_{n-2} and is irregular with max degree n-1.  Widen only if numerics
    // ever disagree.
    double lo = n - 3.0, hi = n - 1.0;
    for (;;) {
        try {
            return largest_real_root(p, lo, hi);
        } catch (const std::invalid_argument&) {
            if (lo <= 0.0 && hi >= 2.0 * n) throw;
            const double span = hi - lo;
            lo = std::max(0.0, lo - span);
            hi = std::min(2.0 * n, hi + span);
        }
    }
}

// Closed form for the candidate radius at the largest admissible clique
// size s = n/2 - 1 (even n).
inline double candidate_max_s_radius(int n, double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("candidate_max_s_radius: alpha must lie in [0,1)");
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("candidate_max_s_radius: order must be even and >= 4");
    const double a = alpha, m = n;
    const double disc = (4.0 * a * a - 8.0 * a + 5.0) * m * m + 8.0 * (a - 1.0) * m;
    return 0.25 * ((2.0 * a + 1.0) * m - 4.0 + std::sqrt(disc));
}

}  // namespace rhomatch
