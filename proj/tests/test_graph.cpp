#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rhomatch/enumerate.hpp"
#include "rhomatch/families.hpp"
#include "rhomatch/graph.hpp"
#include "rhomatch/graph6.hpp"

using namespace rhomatch;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// independent connectivity oracle: union-find over the edge list
bool connected_oracle(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) parent[find(u)] = find(v);
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

}  // namespace

TEST_CASE("graph stores undirected simple edges", "[graph]") {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    REQUIRE(g.has_edge(0, 3));
    REQUIRE(g.has_edge(3, 0));
    REQUIRE_FALSE(g.has_edge(0, 4));
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.degree(3) == 2);
    REQUIRE(g.neighbors(3) == std::vector<int>{0, 4});
    REQUIRE(g.degrees() == std::vector<int>{1, 0, 0, 2, 1});
    g.add_edge(0, 3);  // duplicate insert is a no-op
    REQUIRE(g.edge_count() == 2);
}

TEST_CASE("graph rejects bad input", "[graph]") {
    REQUIRE_THROWS_AS(Graph(0), std::invalid_argument);
    Graph g(3);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    REQUIRE_THROWS_AS(g.has_edge(-1, 0), std::out_of_range);
    REQUIRE_THROWS_AS(g.degree(5), std::out_of_range);
}

TEST_CASE("connectivity matches a union-find oracle", "[graph]") {
    REQUIRE(is_connected(Graph(1)));
    REQUIRE_FALSE(is_connected(Graph(2)));
    REQUIRE(is_connected(path(7)));
    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    two.add_edge(4, 5);
    REQUIRE_FALSE(is_connected(two));
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 70);  // exercises the >64 path too
        Graph g = random_graph(n, 0.08, rng);
        REQUIRE(is_connected(g) == connected_oracle(g));
    }
}

TEST_CASE("graph6 known encodings", "[graph]") {
    const Graph k1 = parse_graph6("@");
    REQUIRE(k1.order() == 1);
    REQUIRE(k1.edge_count() == 0);

    const Graph k2 = parse_graph6("A_");
    REQUIRE(k2.order() == 2);
    REQUIRE(k2.has_edge(0, 1));

    const Graph e2 = parse_graph6("A?");
    REQUIRE(e2.order() == 2);
    REQUIRE(e2.edge_count() == 0);

    const Graph k4 = parse_graph6("C~");
    REQUIRE(k4.order() == 4);
    REQUIRE(k4.edge_count() == 6);
    REQUIRE(to_graph6(k4) == "C~");

    REQUIRE(to_graph6(path(4)) == "Ch");
    const Graph p4 = parse_graph6("Ch");
    REQUIRE(p4.degrees() == std::vector<int>{1, 2, 2, 1});

    REQUIRE(to_graph6(extremal_graph(10)) == "I~~~~}?_?");
    REQUIRE(to_graph6(extremal_graph(6)) == "E~a?");
}

TEST_CASE("graph6 error offsets point at the offending byte", "[graph]") {
    auto offset_of = [](const std::string& text) {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    REQUIRE(offset_of("") == 0);
    REQUIRE(offset_of("~???") == 0);   // extended length form
    REQUIRE(offset_of("\x20_") == 0);  // length byte below range
    REQUIRE(offset_of("B") == 1);      // truncated edge data
    REQUIRE(offset_of("C~~") == 2);    // trailing byte
    REQUIRE(offset_of("A!") == 1);     // edge byte below range
    REQUIRE(offset_of("Aw") == 1);     // nonzero padding bits
    REQUIRE(offset_of("?") == 0);      // order 0
    REQUIRE_THROWS_AS(to_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 roundtrip on random graphs", "[graph]") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const double p = (rng() % 100) / 100.0;
        const Graph g = random_graph(n, p, rng);
        const std::string g6 = to_graph6(g);
        for (char c : g6) {
            REQUIRE(static_cast<unsigned char>(c) >= 63);
            REQUIRE(static_cast<unsigned char>(c) <= 126);
        }
        REQUIRE(parse_graph6(g6) == g);
    }
}

TEST_CASE("family constructors produce the documented shapes", "[graph]") {
    const Graph k5 = complete_graph(5);
    REQUIRE(k5.edge_count() == 10);
    REQUIRE(k5.degrees() == std::vector<int>(5, 4));

    const Graph ext10 = extremal_graph(10);
    REQUIRE(ext10.order() == 10);
    REQUIRE(ext10.edge_count() == 30);
    std::vector<int> deg = ext10.degrees();
    std::sort(deg.begin(), deg.end());
    REQUIRE(deg == std::vector<int>{1, 1, 7, 7, 7, 7, 7, 7, 7, 9});
    REQUIRE(is_connected(ext10));

    const Graph cand = extremal_candidate(10, 2);
    REQUIRE(cand.edge_count() == 27);
    std::vector<int> cdeg = cand.degrees();
    std::sort(cdeg.begin(), cdeg.end());
    REQUIRE(cdeg == std::vector<int>{2, 2, 2, 6, 6, 6, 6, 6, 9, 9});

    PartitionSpec spec;
    spec.s = 2;
    spec.parts = {3, 2, 1};
    const Graph sf = split_family(spec);
    REQUIRE(sf.order() == 8);
    REQUIRE(sf.edge_count() == 17);
    // clique vertices 0,1 see everyone
    REQUIRE(sf.degree(0) == 7);
    REQUIRE(sf.degree(1) == 7);
    // parts are mutually non-adjacent
    REQUIRE_FALSE(sf.has_edge(2, 5));
    REQUIRE_FALSE(sf.has_edge(5, 7));
    REQUIRE(sf.has_edge(2, 3));

    const Graph star = extremal_graph(4);
    std::vector<int> sdeg = star.degrees();
    std::sort(sdeg.begin(), sdeg.end());
    REQUIRE(sdeg == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("family constructors validate their input", "[graph]") {
    PartitionSpec bad;
    bad.s = 0;
    bad.parts = {2};
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.s = 1;
    bad.parts = {};
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.parts = {2, 3};
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.parts = {3, 0};
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    REQUIRE_THROWS_AS(extremal_graph(3), std::invalid_argument);
    REQUIRE_THROWS_AS(extremal_candidate(10, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(extremal_candidate(10, 5), std::invalid_argument);  // needs n >= 2s+2
    REQUIRE_NOTHROW(extremal_candidate(12, 5));
}

TEST_CASE("enumerator covers every labeled graph exactly once", "[graph]") {
    GraphEnumerator en(3);
    std::set<std::string> seen;
    int edges = 0;
    while (auto g = en.next()) {
        seen.insert(to_graph6(*g));
        edges += g->edge_count();
    }
    REQUIRE(seen.size() == 8);
    REQUIRE(edges == 12);  // each of the 3 pairs appears in half of the 8 masks
}

TEST_CASE("enumerator connected counts match the known sequence", "[graph]") {
    auto count_connected = [](int n) {
        GraphEnumerator en(n, /*connected_only=*/true);
        long c = 0;
        while (en.next()) ++c;
        return c;
    };
    REQUIRE(count_connected(1) == 1);
    REQUIRE(count_connected(2) == 1);
    REQUIRE(count_connected(3) == 4);
    REQUIRE(count_connected(4) == 38);
    REQUIRE(count_connected(5) == 728);
    REQUIRE(count_connected(6) == 26704);
    REQUIRE_THROWS_AS(GraphEnumerator(8), std::invalid_argument);
}
