#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhomatch/eigen.hpp"
#include "rhomatch/families.hpp"
#include "rhomatch/graph.hpp"
#include "rhomatch/graph6.hpp"
#include "rhomatch/matching.hpp"
#include "rhomatch/thresholds.hpp"

namespace rhomatch {

// Comparison slack for radius-vs-threshold decisions.
inline constexpr double kThresholdTol = 1e-9;

enum class Verdict {
    PM_GUARANTEED,       // radius at/above threshold, not the excepted graph
    EXTREMAL_EXCEPTION,  // the one graph at the threshold with no perfect matching
    INCONCLUSIVE,        // radius below threshold: the certificate is silent
    HYPOTHESIS_UNMET,    // odd/small/disconnected input, threshold not applicable
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::PM_GUARANTEED: return "PM_GUARANTEED";
        case Verdict::EXTREMAL_EXCEPTION: return "EXTREMAL_EXCEPTION";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
        case Verdict::HYPOTHESIS_UNMET: return "HYPOTHESIS_UNMET";
    }
    return "?";
}

struct Certificate {
    std::string graph6;  // empty when the order exceeds the format
    double alpha = 0.0;
    double rho = std::numeric_limits<double>::quiet_NaN();
    double threshold = std::numeric_limits<double>::quiet_NaN();
    Verdict verdict = Verdict::HYPOTHESIS_UNMET;
    std::optional<bool> oracle_pm;
};

// Label-independent test for K_1 \/ (K_{n-3} u 2K_1): degree multiset
// {n-1, (n-3)^{n-3}, 1, 1}, the two leaves hang off the center, and the
// degree-(n-3) vertices form a clique.
inline bool is_extremal_graph(const Graph& g) {
    const int n = g.order();
    if (n < 4) return false;
    const std::vector<int> deg = g.degrees();
    int center = -1;
    std::vector<int> leaves, mid;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == n - 1) {
            if (center != -1 && n != 4) return false;
            if (center == -1) center = v;
        } else if (deg[v] == 1) {
            leaves.push_back(v);
        } else if (deg[v] == n - 3) {
            mid.push_back(v);
        } else {
            return false;
        }
    }
    if (n == 4) {
        // K_1 \/ (K_1 u 2K_1) is the star; degrees 3,1,1,1
        int big = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
        return big == 1 && static_cast<int>(leaves.size()) == 3;
    }
    if (center == -1 || static_cast<int>(leaves.size()) != 2 ||
        static_cast<int>(mid.size()) != n - 3)
        return false;
    for (int v : leaves)
        if (!g.has_edge(v, center)) return false;
    for (std::size_t i = 0; i < mid.size(); ++i)
        for (std::size_t j = i + 1; j < mid.size(); ++j)
            if (!g.has_edge(mid[i], mid[j])) return false;
    return true;
}

// Certify perfect-matching existence from the A_alpha radius.  The guarantee
// applies to connected graphs of even order n >= min_theorem_order(alpha);
// anything else is HYPOTHESIS_UNMET.  with_oracle additionally runs the
// exact matching decision (orders <= 24 use the subset DP, larger ones the
// blossom algorithm).
inline Certificate certify(const Graph& g, double alpha, bool with_oracle = false) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("certify: alpha must lie in [0,1)");
    const int n = g.order();
    Certificate cert;
    cert.alpha = alpha;
    if (n <= 62) cert.graph6 = to_graph6(g);
    cert.rho = rho_alpha(g, alpha);
    if (n >= 4) cert.threshold = threshold(n, alpha, /*force=*/true);
    const bool applies =
        n % 2 == 0 && static_cast<double>(n) >= min_theorem_order(alpha) && is_connected(g);
    if (!applies) {
        cert.verdict = Verdict::HYPOTHESIS_UNMET;
    } else if (cert.rho >= cert.threshold - kThresholdTol) {
        cert.verdict = is_extremal_graph(g) ? Verdict::EXTREMAL_EXCEPTION : Verdict::PM_GUARANTEED;
    } else {
        cert.verdict = Verdict::INCONCLUSIVE;
    }
    if (with_oracle)
        cert.oracle_pm = n <= 24 ? has_perfect_matching_dp(g) : max_matching(g).perfect;
    return cert;
}

}  // namespace rhomatch
