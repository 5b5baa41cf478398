#include <doctest.h>

#include "interlace/error.hpp"
#include "interlace/interlace_polys.hpp"
#include "interlace/plane.hpp"

using namespace interlace;

namespace {

PlaneGraph plane_cycle(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    std::vector<std::vector<uint32_t>> rot(k);
    for (std::size_t v = 0; v < k; ++v) {
        uint32_t incoming = static_cast<uint32_t>(2 * ((v + k - 1) % k) + 1);
        uint32_t outgoing = static_cast<uint32_t>(2 * v);
        rot[v] = {incoming, outgoing};
    }
    return PlaneGraph(k, edges, rot);
}

PlaneGraph plane_single_edge() {
    return PlaneGraph(2, {{0, 1}}, {{0}, {1}});
}

PlaneGraph plane_theta() {
    // Two vertices joined by three parallel edges; rotations reversed at
    // the second vertex.
    return PlaneGraph(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 2, 4}, {5, 3, 1}});
}

PlaneGraph plane_k4() {
    // Outer triangle 0,1,2 counterclockwise with 3 in the middle.
    std::vector<std::pair<std::size_t, std::size_t>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<uint32_t>> rot = {
        {0, 4, 2},    // at 0: to 1, to 3, to 2
        {6, 8, 1},    // at 1: to 2, to 3, to 0
        {3, 10, 7},   // at 2: to 0, to 3, to 1
        {5, 9, 11},   // at 3: to 0, to 1, to 2
    };
    return PlaneGraph(4, edges, rot);
}

const IntPoly1 kX = IntPoly1::monomial(1);

}  // namespace

TEST_SUITE("plane") {

TEST_CASE("tutte polynomial on the named examples") {
    // A path on four vertices: all edges are bridges.
    MultiGraph tree{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(tutte(tree) == IntPoly2::monomial(3, 0));

    MultiGraph loop{1, {{0, 0}}};
    CHECK(tutte(loop) == IntPoly2::monomial(0, 1));

    MultiGraph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(tutte(k3) ==
          IntPoly2::monomial(2, 0) + IntPoly2::monomial(1, 0) + IntPoly2::monomial(0, 1));
}

TEST_CASE("plane validation") {
    CHECK(plane_cycle(3).face_count() == 2);
    CHECK(plane_single_edge().face_count() == 1);
    CHECK(plane_theta().face_count() == 3);
    CHECK(plane_k4().face_count() == 4);

    // K4 with two rotations transposed is a torus embedding and fails
    // Euler validation.
    std::vector<std::pair<std::size_t, std::size_t>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<uint32_t>> rot = {
        {0, 4, 2}, {6, 8, 1}, {3, 7, 10}, {5, 9, 11}};
    CHECK_THROWS_AS(PlaneGraph(4, edges, rot), ValidationError);

    CHECK_THROWS_AS(PlaneGraph(1, {}, {{}}).oriented_medial(), ValidationError);
}

TEST_CASE("medial of a cycle doubles each adjacency") {
    TwoInTwoOutDigraph med = plane_cycle(3).oriented_medial();
    CHECK(med.order() == 3);
    CHECK(med.host().edge_count() == 6);
    // Each adjacent pair of medial vertices is joined twice, no loops.
    std::size_t loops = 0;
    for (auto [a, b] : med.host().edges())
        if (FourRegularGraph::vertex_of(a) == FourRegularGraph::vertex_of(b)) ++loops;
    CHECK(loops == 0);
}

TEST_CASE("medial of a single edge is one vertex with two loops") {
    TwoInTwoOutDigraph med = plane_single_edge().oriented_medial();
    CHECK(med.order() == 1);
    CHECK(med.host().edge_count() == 2);
}

TEST_CASE("tutte diagonal equals martin of the oriented medial") {
    std::vector<PlaneGraph> corpus;
    for (std::size_t k = 3; k <= 6; ++k) corpus.push_back(plane_cycle(k));
    corpus.push_back(plane_theta());
    corpus.push_back(plane_k4());
    corpus.push_back(plane_single_edge());

    for (const PlaneGraph& pg : corpus) {
        IntPoly1 diag = tutte(pg.to_multigraph()).diagonal();
        TwoInTwoOutDigraph med = pg.oriented_medial();
        CHECK(diag == martin_directed(med));
        for (const TransitionSystem& ts : euler_systems_directed(med)) {
            Graph h = interlace_graph(med.host(), trace_directed(med, ts));
            CHECK(q_nullity_statesum(h) == diag);
        }
    }
}

TEST_CASE("triangle anchor chain") {
    IntPoly1 expect = IntPoly1::monomial(2) + kX * BigInt(2);  // x^2 + 2x
    CHECK(tutte(plane_cycle(3).to_multigraph()).diagonal() == expect);
    CHECK(martin_directed(plane_cycle(3).oriented_medial()) == expect);
    CHECK(q_nullity_statesum(Graph::path(3)) == expect);
}

}
