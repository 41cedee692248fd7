#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhomatch/certify.hpp"
#include "rhomatch/quotient.hpp"
#include "rhomatch/thresholds.hpp"

namespace rhomatch {

struct SweepEntry {
    int n = 0;
    double alpha = 0.0;
    int s = 0;
    double largest_root = 0.0;
    bool is_argmax = false;
};

// Candidate radius for every clique size s = 1..n/2-1 at fixed (n, alpha).
inline std::vector<SweepEntry> candidate_root_table(int n, double alpha) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("candidate_root_table: order must be even and >= 4");
    std::vector<SweepEntry> out;
    int best = 0;
    for (int s = 1; s <= n / 2 - 1; ++s) {
        const double root =
            largest_real_root(candidate_charpoly(n, s, alpha), n - s - 2.0, static_cast<double>(n));
        out.push_back(SweepEntry{n, alpha, s, root, false});
        if (root > out[best].largest_root) best = static_cast<int>(out.size()) - 1;
    }
    out[best].is_argmax = true;
    return out;
}

// Clique size maximizing the candidate radius (smallest s on exact ties).
inline int candidate_argmax_s(int n, double alpha) {
    const std::vector<SweepEntry> table = candidate_root_table(n, alpha);
    for (const SweepEntry& e : table)
        if (e.is_argmax) return e.s;
    return 1;
}

// One verified ordering instance.  margin = rhs - lhs; a strict claim needs
// margin > kThresholdTol, an equality claim |margin| <= kThresholdTol.
// hypothesis_met false marks instances outside the guarantee (kept in
// reports, excluded from the violation count).
struct OrderingCheck {
    std::string rule;  // "collapse" | "fewer_components" | "max_at_s1"
    int n = 0;
    double alpha = 0.0;
    int s = 0;
    int q = -1;
    std::string detail;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool expect_equal = false;
    bool hypothesis_met = true;
    bool pass = false;
};

inline void score(OrderingCheck& c) {
    c.margin = c.rhs - c.lhs;
    c.pass = c.expect_equal ? std::abs(c.margin) <= kThresholdTol : c.margin > kThresholdTol;
}

// Replacing the parts of an odd-part split family by one big part plus
// singletons (same s, same part count) never lowers the quotient radius;
// equality only when the family already has that shape.
inline OrderingCheck check_collapse(const PartitionSpec& spec, double alpha) {
    spec.validate();
    const int q = static_cast<int>(spec.parts.size());
    if (q < spec.s + 2)
        throw std::invalid_argument("check_collapse: need at least s+2 parts");
    for (int p : spec.parts)
        if (p % 2 == 0) throw std::invalid_argument("check_collapse: parts must be odd");
    OrderingCheck c;
    c.rule = "collapse";
    c.n = spec.order();
    c.alpha = alpha;
    c.s = spec.s;
    c.q = q;
    c.detail = spec.describe();
    c.lhs = split_quotient(spec, alpha).spectral_radius();
    c.rhs = collapsed_quotient(c.n, spec.s, q, alpha).spectral_radius();
    c.expect_equal = std::all_of(spec.parts.begin() + 1, spec.parts.end(),
                                 [](int p) { return p == 1; });
    score(c);
    return c;
}

// Among collapsed families with fixed s, fewer components means a larger
// radius; the floor q = s+2 is exactly the candidate family.
inline OrderingCheck check_fewer_components(int n, int s, int q, double alpha) {
    if (q < s + 2) throw std::invalid_argument("check_fewer_components: need q >= s+2");
    if ((q - s) % 2 != 0)
        throw std::invalid_argument("check_fewer_components: q and s must have equal parity");
    OrderingCheck c;
    c.rule = "fewer_components";
    c.n = n;
    c.alpha = alpha;
    c.s = s;
    c.q = q;
    c.detail = "q=" + std::to_string(q) + " vs q=" + std::to_string(s + 2);
    c.lhs = collapsed_quotient(n, s, q, alpha).spectral_radius();
    c.rhs = candidate_quotient(n, s, alpha).spectral_radius();
    c.expect_equal = (q == s + 2);
    score(c);
    return c;
}

// The s=1 candidate dominates every s >= 2 candidate once n meets the
// minimum order; below it the ordering genuinely flips, so those entries
// carry hypothesis_met = false and their failures are expected.
inline std::vector<OrderingCheck> check_max_at_s1(int n, double alpha) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("check_max_at_s1: order must be even and >= 4");
    const double tau = threshold(n, alpha, /*force=*/true);
    const bool met = static_cast<double>(n) >= min_theorem_order(alpha);
    std::vector<OrderingCheck> out;
    for (int s = 2; s <= n / 2 - 1; ++s) {
        OrderingCheck c;
        c.rule = "max_at_s1";
        c.n = n;
        c.alpha = alpha;
        c.s = s;
        c.detail = "s=" + std::to_string(s) + " vs s=1";
        c.lhs = largest_real_root(candidate_charpoly(n, s, alpha), n - s - 2.0,
                                  static_cast<double>(n));
        c.rhs = tau;
        c.expect_equal = false;
        c.hypothesis_met = met;
        score(c);
        out.push_back(std::move(c));
    }
    return out;
}

struct SweepReport {
    std::vector<SweepEntry> grid;
    std::vector<OrderingCheck> checks;

    long violations() const {
        long v = 0;
        for (const OrderingCheck& c : checks)
            if (!c.pass && c.hypothesis_met) ++v;
        return v;
    }
};

inline std::vector<double> default_alpha_grid() {
    std::vector<double> a;
    for (int k = 0; k <= 9; ++k) a.push_back(k / 10.0);
    for (double x : {1.0 / 8, 1.0 / 4, 1.0 / 2, 11.0 / 16, 2.0 / 3, 3.0 / 4, 9.0 / 10}) a.push_back(x);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline std::vector<int> default_order_grid() {
    std::vector<int> n;
    for (int k = 10; k <= 40; k += 2) n.push_back(k);
    return n;
}

// Every ordering check at one grid point: the full s-sweep, component
// reduction for small s at several q, and part-collapse on a deterministic
// set of odd-part shapes.
inline std::vector<OrderingCheck> checks_at(int n, double alpha) {
    std::vector<OrderingCheck> out = check_max_at_s1(n, alpha);
    for (int s = 1; s <= std::min(3, n / 2 - 1); ++s) {
        for (int q = s + 2; q <= s + 6 && n - s - q + 1 >= 1; q += 2)
            out.push_back(check_fewer_components(n, s, q, alpha));
        const int q0 = s + 2;
        const int big = n - s - q0 + 1;
        if (big < 1) continue;
        PartitionSpec spec;
        spec.s = s;
        spec.parts.assign(1, big);
        spec.parts.insert(spec.parts.end(), q0 - 1, 1);
        out.push_back(check_collapse(spec, alpha));  // already collapsed: equality
        if (big - 2 >= 3) {
            PartitionSpec strict = spec;
            strict.parts[0] = big - 2;
            strict.parts[1] = 3;
            out.push_back(check_collapse(strict, alpha));
        }
        if (big - 4 >= 5) {
            PartitionSpec strict = spec;
            strict.parts[0] = big - 4;
            strict.parts[1] = 5;
            out.push_back(check_collapse(strict, alpha));
        }
    }
    return out;
}

inline SweepReport run_grid(const std::vector<int>& orders, const std::vector<double>& alphas) {
    SweepReport report;
    for (int n : orders) {
        for (double alpha : alphas) {
            std::vector<SweepEntry> table = candidate_root_table(n, alpha);
            report.grid.insert(report.grid.end(), table.begin(), table.end());
            std::vector<OrderingCheck> checks = checks_at(n, alpha);
            report.checks.insert(report.checks.end(), checks.begin(), checks.end());
        }
    }
    return report;
}

}  // namespace rhomatch
