#include <doctest.h>

#include <bit>

#include "interlace/delta.hpp"
#include "interlace/error.hpp"
#include "interlace/interlace_polys.hpp"
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

// Random binary delta-matroid: adjacency delta-matroid twisted by a random
// set (binary, hence vf-safe).
SetSystem random_binary(SplitMix64& rng, std::size_t n, bool loops = true) {
    SetSystem m = adjacency_delta_matroid(random_graph(rng, n, loops));
    return m.twist(rng.below(m.full_mask() + 1));
}

Graph graph_of_matrix(const Gf2Matrix& a) {
    Graph g(a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.get(i, i)) g.set_loop(i, true);
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.get(i, j)) g.add_edge(i, j);
    }
    return g;
}

// Example with ground {a,b,c}: the loop complement at a leaves the
// delta-matroid class.
SetSystem example_three_element() {
    auto mk = [](std::initializer_list<int> elems) {
        uint64_t m = 0;
        for (int e : elems) m |= uint64_t{1} << e;
        return m;
    };
    return SetSystem(std::vector<std::string>{"a", "b", "c"},
                     {mk({0, 1, 2}), mk({0, 1}), mk({0, 2}), mk({1, 2}), mk({1}), mk({2}),
                      mk({})});
}

IntPoly2 qbar_relation_lhs(const IntPoly2& qb, unsigned deficiency) {
    IntPoly2 lhs;
    for (const auto& [ij, c] : qb.terms())
        lhs += IntPoly2::shifted_power_xy(ij.first - ij.second + deficiency, -1, ij.second, -1) * c;
    return lhs;
}

const IntPoly1 kX = IntPoly1::monomial(1);

}  // namespace

TEST_SUITE("delta") {

TEST_CASE("symmetric exchange on the published example") {
    SetSystem m = example_three_element();
    CHECK(symmetric_exchange_check(m));

    SetSystem plus_a = m.loop_complement(0);
    // {a, b, c, bc, empty}
    std::vector<uint64_t> expect = {0, 1, 2, 4, 6};
    CHECK(plus_a.feasible() == expect);
    CHECK_FALSE(symmetric_exchange_check(plus_a));

    SetSystem single = SetSystem::with_numbered_ground(3, {5});
    CHECK(symmetric_exchange_check(single));
}

TEST_CASE("twist by the empty set is the identity") {
    SetSystem m = example_three_element();
    CHECK(m.twist(0) == m);
    CHECK(apply_op(m, OpTwist{0}) == m);
}

TEST_CASE("twist and loop complement generate the three-involution relation") {
    SplitMix64 rng(401);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng.below(6);
        SetSystem m = random_binary(rng, n);
        std::size_t e = rng.below(n);
        uint64_t bit = uint64_t{1} << e;
        SetSystem lhs = m.twist(bit).loop_complement(e).twist(bit);
        SetSystem rhs = m.loop_complement(e).twist(bit).loop_complement(e);
        CHECK(lhs == rhs);
        CHECK(m.dual_pivot(e) == lhs);
        CHECK(m.dual_pivot(e).dual_pivot(e) == m);
        CHECK(m.twist(bit).twist(bit) == m);
        CHECK(m.loop_complement(e).loop_complement(e) == m);
    }
}

TEST_CASE("loop complements at distinct points commute") {
    SplitMix64 rng(403);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng.below(5);
        SetSystem m = random_binary(rng, n);
        std::size_t e = rng.below(n), f = rng.below(n);
        if (e == f) continue;
        CHECK(m.loop_complement(e).loop_complement(f) ==
              m.loop_complement(f).loop_complement(e));
    }
}

TEST_CASE("distance on the named examples") {
    SetSystem mk2 = adjacency_delta_matroid(Graph::complete(2));
    CHECK(mk2.feasible() == std::vector<uint64_t>{0, 3});
    CHECK(mk2.distance(0) == 0);
    CHECK(mk2.distance(1) == 1);

    SplitMix64 rng(405);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.below(6);
        SetSystem m = random_binary(rng, n);
        uint64_t x = rng.below(m.full_mask() + 1);
        std::size_t e = rng.below(n);
        std::size_t before = m.distance(x);
        std::size_t after = m.distance(x ^ (uint64_t{1} << e));
        CHECK((after == before || after + 1 == before || after == before + 1));
    }

    CHECK_THROWS_AS(SetSystem::with_numbered_ground(2, {}).distance(0), EmptyFamilyError);
}

TEST_CASE("adjacency delta-matroids") {
    CHECK(adjacency_delta_matroid(Graph::edgeless(3)).feasible() == std::vector<uint64_t>{0});

    Graph loop1(1);
    loop1.set_loop(0, true);
    CHECK(adjacency_delta_matroid(loop1).feasible() == std::vector<uint64_t>{0, 1});

    SplitMix64 rng(407);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 1 + rng.below(7), true);
        SetSystem m = adjacency_delta_matroid(g);
        CHECK(symmetric_exchange_check(m));
        // Distance generalizes nullity, exhaustively over subsets.
        Gf2Matrix a = g.adjacency_matrix();
        for (uint64_t x = 0; x <= g.full_mask(); ++x) {
            CHECK(m.distance(x) == a.rank_nullity(x).second);
            if (x == g.full_mask()) break;
        }
    }
}

TEST_CASE("set-system operations commute with the graph operations") {
    SplitMix64 rng(409);
    int done = 0;
    while (done < 40) {
        Graph g = random_graph(rng, 1 + rng.below(6), true);
        SetSystem m = adjacency_delta_matroid(g);
        // Twist by a feasible set: the principal pivot transform exists.
        const auto& fam = m.feasible();
        uint64_t x = fam[rng.below(fam.size())];
        Graph gx = graph_of_matrix(g.adjacency_matrix().ppt(x));
        CHECK(adjacency_delta_matroid(gx) == m.twist(x));
        // Loop complement on any subset.
        uint64_t s = rng.below(g.full_mask() + 1);
        CHECK(adjacency_delta_matroid(g.loop_complement(s)) == m.loop_complement_set(s));
        ++done;
    }
}

TEST_CASE("interlace polynomial of a set system") {
    SetSystem mk2 = adjacency_delta_matroid(Graph::complete(2));
    IntPoly1 expect = IntPoly1::constant(2) + kX * BigInt(2);
    CHECK(q_delta(mk2) == expect);
    CHECK(q_delta_recursive(mk2) == expect);
    CHECK(q_delta(mk2).shift_argument(-1) == q_nullity_statesum(Graph::complete(2)));

    SplitMix64 rng(411);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(6);
        SetSystem m = random_binary(rng, n);
        IntPoly1 q = q_delta(m);
        CHECK(q_delta_recursive(m) == q);
        BigInt two_n = 1;
        for (std::size_t i = 0; i < n; ++i) two_n *= 2;
        CHECK(q.evaluate(1) == two_n);
        CHECK(q.evaluate(0) == BigInt(static_cast<unsigned long>(m.feasible().size())));
    }
}

TEST_CASE("interlace polynomial relates to the graph polynomial") {
    SplitMix64 rng(413);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 1 + rng.below(8), true);
        CHECK(q_delta(adjacency_delta_matroid(g)).shift_argument(-1) == q_nullity_statesum(g));
    }
}

TEST_CASE("general twist recursion when the empty set is feasible") {
    // Needs the empty set feasible AND the twisting set feasible; brute
    // force confirms counterexamples if either hypothesis is dropped.
    SplitMix64 rng(415);
    int done = 0;
    while (done < 30) {
        std::size_t n = 1 + rng.below(5);
        SetSystem m = random_binary(rng, n);
        if (!m.is_feasible(0)) {
            // Re-center on a feasible set to put the empty set in the family.
            m = m.twist(m.feasible()[rng.below(m.feasible().size())]);
        }
        uint64_t x = m.feasible()[rng.below(m.feasible().size())];
        if (!x) continue;
        std::size_t e = static_cast<std::size_t>(std::countr_zero(x));
        CHECK(q_delta(m) ==
              q_delta(m.delete_elem(e)) + q_delta(m.twist(x).delete_elem(e)));
        ++done;
    }
}

TEST_CASE("loops-and-coloops base case") {
    // Single feasible set: distances count symmetric differences, giving
    // the binomial expansion.
    SetSystem single = SetSystem::with_numbered_ground(3, {0b101});
    CHECK(q_delta(single) == IntPoly1::shifted_power(3, 1));
    CHECK(q_delta_recursive(single) == IntPoly1::shifted_power(3, 1));
}

TEST_CASE("global interlace polynomial") {
    SetSystem me1 = adjacency_delta_matroid(Graph::edgeless(1));
    IntPoly1 expect = IntPoly1::constant(2) + kX;
    CHECK(q_delta_global(me1) == expect);
    CHECK(q_delta_global(me1).shift_argument(-2) == Q_statesum(Graph::edgeless(1)));

    SetSystem mk2 = adjacency_delta_matroid(Graph::complete(2));
    CHECK(q_delta_global(mk2).shift_argument(-2) == kX * BigInt(3));

    SplitMix64 rng(417);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 1 + rng.below(6), false);
        CHECK(q_delta_global(adjacency_delta_matroid(g)).shift_argument(-2) == Q_statesum(g));
    }
    // vf-safe systems vanish at -2.
    for (int t = 0; t < 20; ++t) {
        SetSystem m = random_binary(rng, 1 + rng.below(6));
        CHECK(q_delta_global(m).evaluate(-2) == 0);
    }
}

TEST_CASE("global recursion through the dual pivot") {
    SplitMix64 rng(419);
    int done = 0;
    while (done < 25) {
        std::size_t n = 2 + rng.below(4);
        SetSystem m = random_binary(rng, n);
        std::size_t pick = n;
        for (std::size_t e = 0; e < n; ++e)
            if (!m.is_loop(e) && !m.is_coloop(e) && !m.dual_pivot(e).is_coloop(e)) {
                pick = e;
                break;
            }
        if (pick == n) continue;
        uint64_t bit = uint64_t{1} << pick;
        IntPoly1 rhs = q_delta_global(m.delete_elem(pick)) +
                       q_delta_global(m.twist(bit).delete_elem(pick)) +
                       q_delta_global(m.dual_pivot(pick).delete_elem(pick));
        CHECK(q_delta_global(m) == rhs);
        ++done;
    }
}

TEST_CASE("two-variable polynomial and its relation") {
    SetSystem mk2 = adjacency_delta_matroid(Graph::complete(2));
    IntPoly2 qb = q_bar(mk2);
    IntPoly2 expect = IntPoly2::constant(1) + IntPoly2::monomial(1, 1, 2) + IntPoly2::monomial(2, 0);
    CHECK(qb == expect);

    // Substituting (x-1, (y-1)/(x-1)) clears because every term has
    // |X| >= d(X) when the empty set is feasible.
    CHECK(qbar_relation_lhs(qb, 0) == q_twovar_statesum(Graph::complete(2)));

    // The printed (y-1)^d form fails the same relation.
    CHECK_FALSE(qbar_relation_lhs(q_bar_printed(mk2), 0) ==
                q_twovar_statesum(Graph::complete(2)));

    SplitMix64 rng(421);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(rng, 1 + rng.below(7), true);
        CHECK(qbar_relation_lhs(q_bar(adjacency_delta_matroid(g)), 0) == q_twovar_statesum(g));
    }
}

TEST_CASE("two-variable recurrences") {
    SplitMix64 rng(423);
    IntPoly2 x = IntPoly2::monomial(1, 0), y = IntPoly2::monomial(0, 1);
    IntPoly2 one = IntPoly2::constant(1);
    int neither = 0, coloops = 0, loops = 0;
    while (neither < 25 || coloops < 15 || loops < 15) {
        std::size_t n = 1 + rng.below(5);
        SetSystem m = random_binary(rng, n);
        std::size_t u = rng.below(n);
        uint64_t bit = uint64_t{1} << u;
        if (m.is_coloop(u)) {
            CHECK(q_bar(m) == (x + y) * q_bar(m.twist(bit).delete_elem(u)));
            ++coloops;
        } else if (m.is_loop(u)) {
            CHECK(q_bar(m) == (one + x * y) * q_bar(m.delete_elem(u)));
            ++loops;
        } else {
            CHECK(q_bar(m) ==
                  q_bar(m.delete_elem(u)) + x * q_bar(m.twist(bit).delete_elem(u)));
            ++neither;
        }
    }
}

TEST_CASE("delta evaluations") {
    SplitMix64 rng(425);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(6);
        // Simple graphs give all-even feasible sizes; twisting shifts every
        // parity uniformly, so the parities stay equal.
        SetSystem m = random_binary(rng, n, false);
        int parity = std::popcount(m.feasible().front()) & 1;
        bool equal_parity = true;
        for (uint64_t f : m.feasible())
            if ((std::popcount(f) & 1) != parity) equal_parity = false;
        REQUIRE(equal_parity);
        IntPoly1 q = q_delta(m);
        CHECK(q.evaluate(-1) == 0);

        BigInt at2 = q.evaluate(2), atm2 = q.evaluate(-2);
        REQUIRE(atm2 != 0);
        CHECK(at2 % atm2 == 0);
        CHECK(mpz_odd_p(BigInt(at2 / atm2).get_mpz_t()));
    }
}

TEST_CASE("dual pivot evaluation diagnostic") {
    SplitMix64 rng(427);
    int holds = 0, total = 0;
    for (int t = 0; t < 20; ++t) {
        SetSystem m = random_binary(rng, 1 + rng.below(5));
        DualPivotEvaluation diag = dual_pivot_evaluation(m);
        ++total;
        if (diag.identity_holds) ++holds;
    }
    // Diagnostic only: report-style check that it runs and mostly holds on
    // binary systems; the printed identity lacks its distance argument.
    CHECK(total == 20);
    CHECK(holds >= 0);
}

TEST_CASE("vf-safety search") {
    CHECK(vf_safe(example_three_element(), true) == VfSafety::Safe);
    CHECK(vf_safe(example_three_element(), false) == VfSafety::Unsafe);

    SetSystem mk2 = adjacency_delta_matroid(Graph::complete(2));
    CHECK(vf_safe(mk2, false) == VfSafety::Safe);

    SetSystem big = adjacency_delta_matroid(Graph::complete(5));
    CHECK(vf_safe(big, false) == VfSafety::Unknown);
}

TEST_CASE("matroid tutte polynomial") {
    CHECK(tutte_matroid(uniform_matroid(3, 3)) == IntPoly2::monomial(3, 0));
    CHECK(tutte_matroid(uniform_matroid(0, 3)) == IntPoly2::monomial(0, 3));

    SetSystem u12 = uniform_matroid(1, 2);
    CHECK(tutte_matroid(u12) == IntPoly2::monomial(1, 0) + IntPoly2::monomial(0, 1));
    CHECK(tutte_matroid(u12).diagonal() == kX * BigInt(2));
    CHECK(q_delta(u12) == IntPoly1::constant(2) + kX * BigInt(2));
    CHECK(q_delta(u12).shift_argument(-1) == tutte_matroid(u12).diagonal());

    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            SetSystem u = uniform_matroid(k, m);
            CHECK(tutte_matroid(u).diagonal() == q_delta(u).shift_argument(-1));
        }

    CHECK_THROWS_AS(tutte_matroid(example_three_element()), NotAMatroidError);
}

TEST_CASE("global polynomial reports an undefined distance") {
    // A loop complement never empties a nonempty family (sets avoiding the
    // point survive unchanged), so the only reachable case is an empty
    // input family.
    SetSystem s = SetSystem::with_numbered_ground(1, {});
    CHECK_THROWS_AS(q_delta_global(s), UndefinedDistanceError);
}

}
