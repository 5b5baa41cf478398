#include <doctest.h>

#include "interlace/error.hpp"
#include "interlace/graph.hpp"
#include "interlace/rng.hpp"

using namespace interlace;

namespace {

Graph random_graph(SplitMix64& rng, std::size_t n, bool loops) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.coin()) g.add_edge(i, j);
        if (loops && rng.coin()) g.set_loop(i, true);
    }
    return g;
}

// All labeled graphs on n vertices, optionally with loops, delivered to fn.
template <typename Fn>
void for_all_graphs(std::size_t n, bool loops, Fn&& fn) {
    std::size_t pairs = n * (n - 1) / 2;
    uint64_t edge_limit = uint64_t{1} << pairs;
    uint64_t loop_limit = loops ? (uint64_t{1} << n) : 1;
    for (uint64_t em = 0; em < edge_limit; ++em)
        for (uint64_t lm = 0; lm < loop_limit; ++lm) {
            Graph g(n);
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, ++bit)
                    if ((em >> bit) & 1) g.add_edge(i, j);
            for (std::size_t i = 0; i < n; ++i)
                if ((lm >> i) & 1) g.set_loop(i, true);
            fn(g);
        }
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("local complement on the named examples") {
    Graph e4 = Graph::edgeless(4);
    CHECK(e4.local_complement(2) == e4);

    Graph k3 = Graph::complete(3);
    Graph lc = k3.local_complement(0);  // toggles the single pair {1,2}
    CHECK(lc.has_edge(0, 1));
    CHECK(lc.has_edge(0, 2));
    CHECK_FALSE(lc.has_edge(1, 2));

    SplitMix64 rng(2);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 1 + rng.below(8), true);
        std::size_t v = rng.below(g.order());
        CHECK(g.local_complement(v).local_complement(v) == g);
    }
}

TEST_CASE("pivot on the named examples") {
    Graph k2 = Graph::complete(2);
    CHECK(k2.pivot(0, 1) == k2);

    Graph p3 = Graph::path(3);  // 0-1-2, pivot on the edge 01
    CHECK(p3.pivot(0, 1) == p3);

    SplitMix64 rng(3);
    int done = 0;
    while (done < 100) {
        Graph g = random_graph(rng, 2 + rng.below(7), false);
        auto es = g.edges();
        if (es.empty()) continue;
        auto [a, b] = es[rng.below(es.size())];
        CHECK(g.pivot(a, b).pivot(a, b) == g);
        ++done;
    }
}

TEST_CASE("pivot rejects non-edges and looped endpoints") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.pivot(0, 2), PivotError);
    g.set_loop(0, true);
    CHECK_THROWS_AS(g.pivot(0, 1), PivotError);
}

TEST_CASE("loop complement on the named examples") {
    Graph k2 = Graph::complete(2);
    CHECK(k2.loop_complement(0) == k2);
    CHECK(k2.loop_complement(3).loop_complement(3) == k2);

    Graph both = k2.loop_complement(3);
    Gf2Matrix m = both.adjacency_matrix();
    CHECK(m.get(0, 0));
    CHECK(m.get(0, 1));
    CHECK(m.get(1, 0));
    CHECK(m.get(1, 1));
}

TEST_CASE("pivot equals triple local complement with labels swapped") {
    // Exhaustive over simple graphs up to n = 6, plus looped graphs up to
    // n = 4 and random looped graphs at n = 6.
    auto check_graph = [](const Graph& g) {
        for (auto [a, b] : g.edges()) {
            if (g.looped(a) || g.looped(b)) continue;
            Graph lhs = g.pivot(a, b).with_labels_swapped(a, b);
            Graph rhs = g.local_complement(a).local_complement(b).local_complement(a);
            CHECK(lhs == rhs);
        }
    };
    for (std::size_t n = 2; n <= 6; ++n) for_all_graphs(n, false, check_graph);
    for (std::size_t n = 2; n <= 4; ++n) for_all_graphs(n, true, check_graph);
    SplitMix64 rng(5);
    for (int t = 0; t < 500; ++t) check_graph(random_graph(rng, 6, true));
}

TEST_CASE("complement operations commute with restriction away from the vertex") {
    SplitMix64 rng(6);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(rng, 2 + rng.below(6), true);
        std::size_t v = rng.below(g.order());
        uint64_t mask = rng.below(g.full_mask() + 1) | (uint64_t{1} << v);
        // Restriction keeps v so the operation stays defined; compare the
        // parts away from v's neighborhood influence only when N(v) is
        // inside the mask.
        if ((g.neighbors(v) & ~mask) != 0) continue;
        std::size_t v_in = 0;
        for (std::size_t i = 0; i < v; ++i)
            if ((mask >> i) & 1) ++v_in;
        CHECK(g.local_complement(v).induced(mask) == g.induced(mask).local_complement(v_in));
        CHECK(g.loop_complement(uint64_t{1} << v).induced(mask) ==
              g.induced(mask).loop_complement(uint64_t{1} << v_in));
    }
}

TEST_CASE("graph stats on the named examples") {
    GraphStats en = graph_stats(Graph::edgeless(4));
    CHECK(en.components == 4);
    CHECK(en.independence_number == 4);
    CHECK(en.orbit_max_independence == 4);
    CHECK(en.orbit_size == 1);

    GraphStats k2 = graph_stats(Graph::complete(2));
    CHECK(k2.components == 1);
    CHECK(k2.independence_number == 1);
    CHECK(k2.orbit_max_independence == 1);

    // K3 is fixed by every pivot: the orbit is a singleton and the orbit
    // maximum stays 1, matching deg q_N(K3) = 1.
    GraphStats k3 = graph_stats(Graph::complete(3));
    CHECK(k3.components == 1);
    CHECK(k3.independence_number == 1);
    CHECK(k3.orbit_size == 1);
    CHECK(k3.orbit_max_independence == 1);

    GraphStats p3 = graph_stats(Graph::path(3));
    CHECK(p3.components == 1);
    CHECK(p3.independence_number == 2);
    CHECK(p3.orbit_max_independence == 2);
}

TEST_CASE("orbit cap flags a partial result") {
    // A 3-cube-ish graph has a pivot orbit larger than 2.
    SplitMix64 rng(9);
    Graph g = random_graph(rng, 6, false);
    while (g.edge_count() < 6) g = random_graph(rng, 6, false);
    GraphStats s = graph_stats(g, 2);
    CHECK(s.orbit_capped);
}

TEST_CASE("labels survive operations") {
    Graph g(std::vector<std::string>{"p", "q", "r"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Graph h = g.pivot(0, 1).delete_vertex(0);
    CHECK(h.labels() == std::vector<std::string>{"q", "r"});
    CHECK_THROWS_AS(g.index_of("zz"), InvalidIndexError);
}

}
