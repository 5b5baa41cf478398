#include <doctest.h>

#include <algorithm>

#include "interlace/error.hpp"
#include "interlace/interlace_polys.hpp"
#include "interlace/isotropic.hpp"

using namespace interlace;
using klein::KVec;

namespace {

Graph random_simple(SplitMix64& rng, std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.coin()) g.add_edge(i, j);
    return g;
}

std::pair<KVec, KVec> random_presentation(SplitMix64& rng, std::size_t n) {
    KVec a = 0, b = 0;
    for (std::size_t v = 0; v < n; ++v) {
        unsigned av = 1 + static_cast<unsigned>(rng.below(3));
        unsigned bv = 1 + static_cast<unsigned>(rng.below(3));
        while (bv == av) bv = 1 + static_cast<unsigned>(rng.below(3));
        a |= klein::unit(v, av);
        b |= klein::unit(v, bv);
    }
    return {a, b};
}

const IntPoly1 kXPoly = IntPoly1::monomial(1);

}  // namespace

TEST_SUITE("isotropic") {

TEST_CASE("one-coordinate systems") {
    IsotropicSystem s(1, {klein::unit(0, klein::kX)});
    CHECK(s.dim_meet_hat(klein::unit(0, klein::kX)) == 1);
    CHECK(s.dim_meet_hat(klein::unit(0, klein::kY)) == 0);
    CHECK_THROWS_AS(s.dim_meet_hat(0), InvalidIndexError);

    CHECK(restricted_tm(s, klein::unit(0, klein::kX)) == IntPoly1::constant(2));
    CHECK(restricted_tm(s, klein::unit(0, klein::kY)) == kXPoly);
    CHECK(global_tm(s) == kXPoly);
}

TEST_CASE("construction validates isotropy and dimension") {
    // x and y at the same coordinate pair to 1 under the form.
    CHECK_THROWS_AS(IsotropicSystem(2, {klein::unit(0, klein::kX), klein::unit(0, klein::kY)}),
                    ValidationError);
    CHECK_THROWS_AS(IsotropicSystem(2, {klein::unit(0, klein::kX), klein::unit(0, klein::kX)}),
                    ValidationError);
}

TEST_CASE("graphic presentations on the named examples") {
    IsotropicSystem e1 = from_graphic_presentation(Graph::edgeless(1),
                                                   presentation_all(1, klein::kX),
                                                   presentation_all(1, klein::kY));
    CHECK(e1.contains(klein::unit(0, klein::kX)));
    CHECK_FALSE(e1.contains(klein::unit(0, klein::kY)));

    IsotropicSystem k2 = from_graphic_presentation(Graph::complete(2),
                                                   presentation_all(2, klein::kX),
                                                   presentation_all(2, klein::kY));
    KVec xy = klein::unit(0, klein::kX) | klein::unit(1, klein::kY);
    KVec yx = klein::unit(0, klein::kY) | klein::unit(1, klein::kX);
    CHECK(k2.contains(xy));
    CHECK(k2.contains(yx));
    CHECK(klein::form(xy, yx, 2) == 0);

    CHECK_THROWS_AS(from_graphic_presentation(Graph::complete(2), presentation_all(2, klein::kX),
                                              presentation_all(2, klein::kX)),
                    ValidationError);
}

TEST_CASE("restricted polynomial against A+B recovers the interlace polynomial") {
    IsotropicSystem e1 = from_graphic_presentation(Graph::edgeless(1),
                                                   presentation_all(1, klein::kX),
                                                   presentation_all(1, klein::kY));
    CHECK(restricted_tm(e1, presentation_all(1, klein::kX) ^ presentation_all(1, klein::kY)) ==
          kXPoly);

    SplitMix64 rng(301);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng.below(7);
        Graph g = random_simple(rng, n);
        auto [a, b] = random_presentation(rng, n);
        IsotropicSystem s = from_graphic_presentation(g, a, b);
        CHECK(restricted_tm(s, a ^ b) == q_nullity_statesum(g));
    }
}

TEST_CASE("global polynomial recovers Q") {
    IsotropicSystem k2 = from_graphic_presentation(Graph::complete(2),
                                                   presentation_all(2, klein::kX),
                                                   presentation_all(2, klein::kY));
    CHECK(global_tm(k2) == kXPoly * BigInt(3));

    for (std::size_t n = 1; n <= 4; ++n) {
        IsotropicSystem s = from_graphic_presentation(Graph::edgeless(n),
                                                      presentation_all(n, klein::kX),
                                                      presentation_all(n, klein::kY));
        CHECK(global_tm(s) == IntPoly1::monomial(static_cast<unsigned>(n)));
    }

    SplitMix64 rng(303);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 1 + rng.below(6);
        Graph g = random_simple(rng, n);
        auto [a, b] = random_presentation(rng, n);
        IsotropicSystem s = from_graphic_presentation(g, a, b);
        CHECK(global_tm(s) == Q_statesum(g));
    }
}

TEST_CASE("two loops and a doubled edge realize the product system") {
    // Host: one loop at each of two vertices plus a doubled edge between
    // them; the labeling sends the loop-with-loop pairing to y.
    FourRegularGraph host =
        FourRegularGraph::from_edges(2, {{0, 0}, {1, 1}, {0, 1}, {0, 1}});
    TransitionLabeling lam;
    lam.lam = {{klein::kY, klein::kX, klein::kZ}, {klein::kY, klein::kX, klein::kZ}};
    IsotropicSystem s = from_four_regular(host, lam);

    std::vector<KVec> expect = {0, klein::unit(0, klein::kY), klein::unit(1, klein::kY),
                                klein::unit(0, klein::kY) | klein::unit(1, klein::kY)};
    std::vector<KVec> got = s.enumerate();
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);

    KVec yy = klein::unit(0, klein::kY) | klein::unit(1, klein::kY);
    KVec xx = klein::unit(0, klein::kX) | klein::unit(1, klein::kX);
    CHECK(s.dim_meet_hat(yy) == 2);
    CHECK(s.dim_meet_hat(xx) == 0);
}

TEST_CASE("single vertex with two loops maps to a one-dimensional image") {
    FourRegularGraph host = FourRegularGraph::from_edges(1, {{0, 0}, {0, 0}});
    IsotropicSystem s = from_four_regular(host, TransitionLabeling::identity(1));
    CHECK(s.enumerate().size() == 2);
}

TEST_CASE("circuit counts match subspace meets for every transition system") {
    SplitMix64 rng(305);
    for (int t = 0; t < 12; ++t) {
        std::size_t n = 1 + rng.below(5);
        FourRegularGraph g = random_four_regular(rng, n, false);
        TransitionLabeling lam = TransitionLabeling::random(rng, n);
        IsotropicSystem s = from_four_regular(g, lam);
        std::size_t k = g.components();
        for_each_transition_system(g, [&](const TransitionSystem& ts, std::size_t circuits) {
            CHECK(circuits - k == s.dim_meet_hat(lam.of(ts)));
        });
    }
}

TEST_CASE("restricted polynomial against the inconsistent vector is the martin polynomial") {
    SplitMix64 rng(307);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 1 + rng.below(5);
        TwoInTwoOutDigraph d = random_two_in_two_out(rng, n, false);
        TransitionLabeling lam = TransitionLabeling::random(rng, n);
        IsotropicSystem s = from_four_regular(d.host(), lam);
        CHECK(restricted_tm(s, inconsistent_vector(d, lam)) == martin_directed(d));
    }
}

}
