#include <doctest.h>

#include <bit>

#include "interlace/error.hpp"
#include "interlace/gf2.hpp"
#include "interlace/graph.hpp"
#include "interlace/rng.hpp"

using namespace interlace;

namespace {

Gf2Matrix random_symmetric(SplitMix64& rng, std::size_t n, bool with_diagonal) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + (with_diagonal ? 0 : 1); j < n; ++j)
            if (rng.coin()) m.set_sym(i, j, true);
    return m;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("rank and nullity on the named examples") {
    Gf2Matrix zero1(1);
    CHECK(zero1.rank_nullity(zero1.full_mask()) == std::pair<std::size_t, std::size_t>{0, 1});

    Gf2Matrix k2(2);
    k2.set_sym(0, 1, true);
    CHECK(k2.rank_nullity(k2.full_mask()) == std::pair<std::size_t, std::size_t>{2, 0});

    // Path a-b-c: rows a and c sum to row b over GF(2).
    Gf2Matrix p3(std::vector<std::string>{"a", "b", "c"});
    p3.set_sym(0, 1, true);
    p3.set_sym(1, 2, true);
    std::vector<std::string> all{"a", "b", "c"};
    CHECK(p3.rank_nullity(all) == std::pair<std::size_t, std::size_t>{2, 1});

    CHECK(p3.rank_nullity(uint64_t{0}) == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("unknown label raises invalid-index") {
    Gf2Matrix m(2);
    std::vector<std::string> bad{"0", "zz"};
    CHECK_THROWS_AS(m.rank_nullity(bad), InvalidIndexError);
}

TEST_CASE("the empty matrix is invertible by convention") {
    Gf2Matrix empty(0);
    CHECK(empty.rank_nullity(empty.full_mask()) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(empty.invertible(0));
    CHECK(empty.ppt(0) == empty);
}

TEST_CASE("rank plus nullity equals subset size") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(8);
        Gf2Matrix m = random_symmetric(rng, n, true);
        uint64_t mask = rng.below(uint64_t{1} << n);
        auto [r, nul] = m.rank_nullity(mask);
        CHECK(r + nul == static_cast<std::size_t>(std::popcount(mask)));
    }
}

TEST_CASE("principal pivot transform on the named examples") {
    Gf2Matrix id = Gf2Matrix::identity(3);
    CHECK(id.ppt(id.full_mask()) == id);

    Gf2Matrix swap2(2);
    swap2.set_sym(0, 1, true);
    CHECK(swap2.ppt(swap2.full_mask()) == swap2);  // self-inverse over GF(2)

    SplitMix64 rng(3);
    Gf2Matrix any = random_symmetric(rng, 5, true);
    CHECK(any.ppt(uint64_t{0}) == any);
}

TEST_CASE("pivot on a singular block names the subset") {
    Gf2Matrix zero(std::vector<std::string>{"a", "b"});
    try {
        zero.ppt(uint64_t{1});
        FAIL("expected PivotError");
    } catch (const PivotError& e) {
        CHECK(std::string(e.what()).find("{a}") != std::string::npos);
    }
}

TEST_CASE("ppt is an involution") {
    SplitMix64 rng(17);
    int done = 0;
    while (done < 200) {
        std::size_t n = 1 + rng.below(8);
        Gf2Matrix m = random_symmetric(rng, n, true);
        uint64_t mask = rng.below(uint64_t{1} << n);
        if (!m.invertible(mask)) continue;
        CHECK(m.ppt(mask).ppt(mask) == m);
        ++done;
    }
}

TEST_CASE("ppt is the partial inverse") {
    SplitMix64 rng(23);
    int done = 0;
    while (done < 300) {
        std::size_t n = 1 + rng.below(8);
        Gf2Matrix m = random_symmetric(rng, n, true);
        uint64_t mask = rng.below(uint64_t{1} << n);
        if (!m.invertible(mask)) continue;
        Gf2Matrix pt = m.ppt(mask);
        uint64_t x = rng.below(uint64_t{1} << n);
        uint64_t y = m.apply(x);
        uint64_t u = (x & ~mask) | (y & mask);
        uint64_t v = (y & ~mask) | (x & mask);
        CHECK(pt.apply(u) == v);
        ++done;
    }
}

TEST_CASE("graph pivot coheres with ppt plus label swap") {
    SplitMix64 rng(31);
    int done = 0;
    while (done < 200) {
        std::size_t n = 2 + rng.below(6);
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.coin()) g.add_edge(i, j);
        auto es = g.edges();
        if (es.empty()) continue;
        auto [a, b] = es[rng.below(es.size())];
        Gf2Matrix lhs = g.pivot(a, b).adjacency_matrix();
        uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
        Gf2Matrix rhs = g.adjacency_matrix().ppt(mask).with_labels_swapped(a, b);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("ppt preserves symmetry") {
    SplitMix64 rng(41);
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + rng.below(8);
        Gf2Matrix m = random_symmetric(rng, n, true);
        uint64_t mask = rng.below(uint64_t{1} << n);
        if (!m.invertible(mask)) continue;
        Gf2Matrix pt = m.ppt(mask);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(pt.get(i, j) == pt.get(j, i));
        ++done;
    }
}

}
