#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rhomatch/eigen.hpp"
#include "rhomatch/families.hpp"
#include "rhomatch/graph.hpp"
#include "rhomatch/quotient.hpp"
#include "rhomatch/symmatrix.hpp"
#include "rhomatch/thresholds.hpp"

using namespace rhomatch;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph random_connected(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

}  // namespace

TEST_CASE("a_alpha assembles degrees and edges", "[spectra]") {
    const Graph p3 = path(3);
    const SymMatrix m = a_alpha(p3, 0.3);
    REQUIRE(m.dim() == 3);
    REQUIRE(m(0, 0) == Catch::Approx(0.3));
    REQUIRE(m(1, 1) == Catch::Approx(0.6));
    REQUIRE(m(0, 1) == Catch::Approx(0.7));
    REQUIRE(m(0, 2) == 0.0);
    REQUIRE(m.trace() == Catch::Approx(1.2));
    REQUIRE_THROWS_AS(a_alpha(p3, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(a_alpha(p3, -0.1), std::invalid_argument);
}

TEST_CASE("complete graph radius is n-1 at every alpha", "[spectra]") {
    for (double alpha : {0.0, 0.3, 0.5, 0.9}) {
        for (int n : {2, 4, 7, 13}) {
            const SpectralResult r = spectral_radius(a_alpha(complete_graph(n), alpha));
            REQUIRE(std::abs(r.radius - (n - 1)) <= 1e-12);
            for (double x : r.vector) REQUIRE(std::abs(x - r.vector[0]) <= 1e-9);
        }
    }
}

TEST_CASE("full spectrum on closed-form cases", "[spectra]") {
    const std::vector<double> star = full_spectrum(a_alpha(extremal_graph(4), 0.0));
    REQUIRE(star.size() == 4);
    REQUIRE(std::abs(star[0] - std::sqrt(3.0)) <= 1e-12);
    REQUIRE(std::abs(star[1]) <= 1e-12);
    REQUIRE(std::abs(star[2]) <= 1e-12);
    REQUIRE(std::abs(star[3] + std::sqrt(3.0)) <= 1e-12);

    const std::vector<double> c4 = full_spectrum(a_alpha(cycle(4), 0.5));
    // half the signless Laplacian of C4: eigenvalues 2, 1, 1, 0
    REQUIRE(std::abs(c4[0] - 2.0) <= 1e-12);
    REQUIRE(std::abs(c4[1] - 1.0) <= 1e-12);
    REQUIRE(std::abs(c4[2] - 1.0) <= 1e-12);
    REQUIRE(std::abs(c4[3]) <= 1e-12);

    const std::vector<double> p3 = full_spectrum(a_alpha(path(3), 0.3));
    const double top = (0.9 + std::sqrt(4.01)) / 2.0;
    const double bottom = (0.9 - std::sqrt(4.01)) / 2.0;
    REQUIRE(std::abs(p3[0] - top) <= 1e-12);
    REQUIRE(std::abs(p3[1] - 0.3) <= 1e-12);
    REQUIRE(std::abs(p3[2] - bottom) <= 1e-12);
}

TEST_CASE("power iteration agrees with Jacobi on random graphs", "[spectra]") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 23);
        const double p = 0.15 + (rng() % 70) / 100.0;
        const double alpha = (rng() % 100) / 101.0;
        const Graph g = random_connected(n, p, rng);
        const SymMatrix m = a_alpha(g, alpha);
        const double ref = full_spectrum(m).front();
        REQUIRE(std::abs(rho_alpha(g, alpha) - ref) <= 1e-10);
    }
}

TEST_CASE("radius is monotone under edge addition, strictly when connected", "[spectra]") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 11);
        const double alpha = (rng() % 100) / 101.0;
        const Graph h = random_connected(n, 0.3 + (rng() % 40) / 100.0, rng);
        // drop a few edges to get a proper subgraph on the same vertex set
        Graph g(n);
        int dropped = 0;
        const int budget = 1 + static_cast<int>(rng() % 3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (h.has_edge(u, v)) {
                    if (dropped < budget && rng() % 7 == 0) {
                        ++dropped;
                        continue;
                    }
                    g.add_edge(u, v);
                }
        const double rg = rho_alpha(g, alpha);
        const double rh = rho_alpha(h, alpha);
        REQUIRE(rg <= rh + 1e-12);
        if (dropped > 0) REQUIRE(rh - rg > 1e-9);
    }
}

TEST_CASE("spectral_radius rejects matrices with negative entries", "[spectra]") {
    SymMatrix m(2);
    m.set(0, 1, -1.0);
    REQUIRE_THROWS_AS(spectral_radius(m), std::invalid_argument);
}

TEST_CASE("split-family quotient radius equals the graph radius", "[spectra]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        PartitionSpec spec;
        spec.s = 1 + static_cast<int>(rng() % 4);
        const int q = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < q; ++i) spec.parts.push_back(1 + static_cast<int>(rng() % 7));
        std::sort(spec.parts.rbegin(), spec.parts.rend());
        const double alpha = (rng() % 100) / 101.0;
        const double via_quotient = split_quotient(spec, alpha).spectral_radius();
        const double via_graph = rho_alpha(split_family(spec), alpha);
        REQUIRE(std::abs(via_quotient - via_graph) <= 1e-9);
    }
}

TEST_CASE("candidate quotient matches its closed-form characteristic polynomial", "[spectra]") {
    for (int n : {8, 12, 20, 34}) {
        for (int s = 1; s <= n / 2 - 1; s += 2) {
            for (double alpha : {0.0, 0.25, 0.5, 11.0 / 16, 0.9}) {
                const QuotientMatrix qm = candidate_quotient(n, s, alpha);
                const CubicPoly from_matrix = qm.charpoly();
                const CubicPoly closed = candidate_charpoly(n, s, alpha);
                const double scale = 1.0 + std::abs(closed.c0);
                REQUIRE(std::abs(from_matrix.c2 - closed.c2) <= 1e-9 * scale);
                REQUIRE(std::abs(from_matrix.c1 - closed.c1) <= 1e-9 * scale);
                REQUIRE(std::abs(from_matrix.c0 - closed.c0) <= 1e-9 * scale);
                // and the quotient radius is a root of it
                const double r = qm.spectral_radius();
                REQUIRE(std::abs(r - rho_alpha(extremal_candidate(n, s), alpha)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("collapsed quotient at the floor equals the candidate quotient", "[spectra]") {
    for (int n : {10, 16, 28}) {
        for (int s : {1, 2, 3}) {
            const QuotientMatrix a = collapsed_quotient(n, s, s + 2, 0.45);
            const QuotientMatrix b = candidate_quotient(n, s, 0.45);
            REQUIRE(a.entries.size() == b.entries.size());
            for (std::size_t k = 0; k < a.entries.size(); ++k)
                REQUIRE(std::abs(a.entries[k] - b.entries[k]) <= 1e-12);
            REQUIRE(a.block_sizes == b.block_sizes);
        }
    }
}

TEST_CASE("middle block degenerates at the top clique size", "[spectra]") {
    // s = n/2-1 leaves a single vertex in the big part: diagonal entry s*alpha
    const int n = 12, s = 5;
    const double alpha = 0.3;
    const QuotientMatrix qm = candidate_quotient(n, s, alpha);
    REQUIRE(std::abs(qm(1, 1) - s * alpha) <= 1e-12);
}

TEST_CASE("validate_equitable accepts the canonical split partition", "[spectra]") {
    PartitionSpec spec;
    spec.s = 2;
    spec.parts = {3, 1, 1};
    const Graph g = split_family(spec);
    std::vector<std::vector<int>> blocks = {{0, 1}, {2, 3, 4}, {5}, {6}};
    const EquitableCheck check = validate_equitable(g, blocks, 0.6);
    REQUIRE(check.ok());
    const QuotientMatrix expected = split_quotient(spec, 0.6);
    REQUIRE(check.quotient->dim == expected.dim);
    for (int i = 0; i < expected.dim; ++i)
        for (int j = 0; j < expected.dim; ++j)
            REQUIRE(std::abs((*check.quotient)(i, j) - expected(i, j)) <= 1e-12);
}

TEST_CASE("validate_equitable pinpoints violations", "[spectra]") {
    const Graph p4 = path(4);
    const EquitableCheck good = validate_equitable(p4, {{0, 3}, {1, 2}}, 0.2);
    REQUIRE(good.ok());
    REQUIRE(std::abs(good.quotient->spectral_radius() - rho_alpha(p4, 0.2)) <= 1e-10);

    const EquitableCheck bad = validate_equitable(p4, {{0, 1}, {2, 3}}, 0.2);
    REQUIRE_FALSE(bad.ok());
    REQUIRE(bad.violating_vertex == 1);

    REQUIRE_THROWS_AS(validate_equitable(p4, {{0, 1}, {1, 2, 3}}, 0.2), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_equitable(p4, {{0, 1}, {2}}, 0.2), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_equitable(p4, {{0, 1, 2, 3}, {}}, 0.2), std::invalid_argument);
}

TEST_CASE("P3 end/center partition gives the textbook quotient", "[spectra]") {
    const double alpha = 0.35;
    const EquitableCheck check = validate_equitable(path(3), {{0, 2}, {1}}, alpha);
    REQUIRE(check.ok());
    const QuotientMatrix& q = *check.quotient;
    REQUIRE(std::abs(q(0, 0) - alpha) <= 1e-12);
    REQUIRE(std::abs(q(0, 1) - (1 - alpha)) <= 1e-12);
    REQUIRE(std::abs(q(1, 0) - 2 * (1 - alpha)) <= 1e-12);
    REQUIRE(std::abs(q(1, 1) - 2 * alpha) <= 1e-12);
    REQUIRE(std::abs(q.spectral_radius() - rho_alpha(path(3), alpha)) <= 1e-11);
}
