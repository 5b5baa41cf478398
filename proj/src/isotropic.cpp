#include "interlace/isotropic.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "interlace/error.hpp"
#include "interlace/gf2.hpp"

namespace interlace {

namespace klein {

bool all_nonzero(KVec v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (entry(v, i) == 0) return false;
    return true;
}

unsigned form(KVec a, KVec b, std::size_t n) {
    unsigned total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = entry(a, i), eb = entry(b, i);
        if (ea && eb && ea != eb) total ^= 1;
    }
    return total;
}

}  // namespace klein

using klein::KVec;

IsotropicSystem::IsotropicSystem(std::size_t n, std::vector<KVec> basis)
    : n_(n), basis_(std::move(basis)) {
    if (n > klein::kMaxCoords)
        throw SizeCapError("isotropic system order exceeds cap of " +
                           std::to_string(klein::kMaxCoords));
    if (basis_.size() != n_)
        throw ValidationError("isotropic system needs a basis of exactly |V| vectors");
    std::vector<uint64_t> rows(basis_.begin(), basis_.end());
    if (gf2_rank(rows) != n_)
        throw ValidationError("isotropic system basis is not independent");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (klein::form(basis_[i], basis_[j], n_))
                throw ValidationError("subspace is not self-orthogonal");
}

std::size_t IsotropicSystem::dim_meet_hat(KVec x) const {
    if (!klein::all_nonzero(x, n_))
        throw InvalidIndexError("complete vector required: zero entry present");
    // dim(L meet M) = dim L + dim M - dim(L + M); M = X-hat has the n
    // generators X_v e_v.
    std::vector<uint64_t> rows(basis_.begin(), basis_.end());
    for (std::size_t v = 0; v < n_; ++v)
        rows.push_back(klein::unit(v, klein::entry(x, v)));
    return 2 * n_ - gf2_rank(std::move(rows));
}

bool IsotropicSystem::contains(KVec v) const {
    std::vector<uint64_t> rows(basis_.begin(), basis_.end());
    std::size_t base = gf2_rank(rows);
    rows.push_back(v);
    return gf2_rank(std::move(rows)) == base;
}

std::vector<KVec> IsotropicSystem::enumerate() const {
    std::vector<KVec> members{0};
    for (KVec b : basis_) {
        std::size_t size = members.size();
        for (std::size_t i = 0; i < size; ++i) members.push_back(members[i] ^ b);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

IntPoly1 restricted_tm(const IsotropicSystem& s, KVec c) {
    std::size_t n = s.order();
    if (!klein::all_nonzero(c, n))
        throw InvalidIndexError("restricted Tutte-Martin needs a complete reference vector");
    std::vector<uint64_t> count(n + 1, 0);
    // Two admissible letters per coordinate.
    std::vector<std::array<unsigned, 2>> options(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t k = 0;
        for (unsigned letter = 1; letter <= 3; ++letter)
            if (letter != klein::entry(c, v)) options[v][k++] = letter;
    }
    uint64_t limit = n >= 64 ? 0 : (uint64_t{1} << n);
    for (uint64_t bits = 0; bits < limit; ++bits) {
        KVec x = 0;
        for (std::size_t v = 0; v < n; ++v)
            x |= klein::unit(v, options[v][(bits >> v) & 1]);
        ++count[s.dim_meet_hat(x)];
    }
    IntPoly1 out;
    for (std::size_t k = 0; k <= n; ++k)
        if (count[k]) out += IntPoly1::shifted_power(static_cast<unsigned>(k), -1) *
                             BigInt(static_cast<unsigned long>(count[k]));
    return out;
}

IntPoly1 global_tm(const IsotropicSystem& s) {
    std::size_t n = s.order();
    if (n > 20) throw SizeCapError("global Tutte-Martin: order " + std::to_string(n) + " exceeds the 3^n cap of 20");
    std::vector<uint64_t> count(n + 1, 0);
    std::vector<unsigned> letter(n, 1);
    while (true) {
        KVec x = 0;
        for (std::size_t v = 0; v < n; ++v) x |= klein::unit(v, letter[v]);
        ++count[s.dim_meet_hat(x)];
        std::size_t v = 0;
        while (v < n && letter[v] == 3) letter[v++] = 1;
        if (v == n) break;
        ++letter[v];
    }
    IntPoly1 out;
    for (std::size_t k = 0; k <= n; ++k)
        if (count[k]) out += IntPoly1::shifted_power(static_cast<unsigned>(k), -2) *
                             BigInt(static_cast<unsigned long>(count[k]));
    return out;
}

IsotropicSystem from_graphic_presentation(const Graph& g, KVec a, KVec b) {
    std::size_t n = g.order();
    if (!klein::all_nonzero(a, n) || !klein::all_nonzero(b, n))
        throw InvalidIndexError("presentation vectors must be complete");
    for (std::size_t v = 0; v < n; ++v)
        if (klein::entry(a, v) == klein::entry(b, v))
            throw ValidationError("presentation vectors agree at vertex " + g.label(v));
    std::vector<KVec> basis;
    basis.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        KVec vec = klein::unit(v, klein::entry(a, v));
        for (uint64_t rest = g.neighbors(v); rest;) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            vec ^= klein::unit(u, klein::entry(b, u));
        }
        basis.push_back(vec);
    }
    IsotropicSystem s(n, std::move(basis));
    // With L spanned by A|{v} + B|N(v), the complete vector meeting L
    // trivially is B: a member A|P + B|N(P) lies in B-hat only when P is
    // empty, since A_v and A_v + B_v both fall outside {0, B_v}.
    if (s.dim_meet_hat(b) != 0)
        throw ValidationError("presentation failed: dim(L meet B-hat) is nonzero");
    return s;
}

KVec presentation_all(std::size_t n, unsigned value) {
    KVec v = 0;
    for (std::size_t i = 0; i < n; ++i) v |= klein::unit(i, value);
    return v;
}

TransitionLabeling TransitionLabeling::identity(std::size_t n) {
    TransitionLabeling t;
    t.lam.assign(n, {klein::kX, klein::kY, klein::kZ});
    return t;
}

TransitionLabeling TransitionLabeling::random(SplitMix64& rng, std::size_t n) {
    TransitionLabeling t;
    t.lam.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::array<uint8_t, 3> perm{klein::kX, klein::kY, klein::kZ};
        for (std::size_t i = 3; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        t.lam.push_back(perm);
    }
    return t;
}

KVec TransitionLabeling::of(const TransitionSystem& ts) const {
    KVec v = 0;
    for (std::size_t i = 0; i < ts.pairing.size(); ++i)
        v |= klein::unit(i, lam[i][ts.pairing[i]]);
    return v;
}

IsotropicSystem from_four_regular(const FourRegularGraph& g, const TransitionLabeling& lam) {
    std::size_t n = g.order();
    std::size_t m = g.edge_count();
    if (m > 24) throw SizeCapError("cycle space enumeration: " + std::to_string(m) + " edges exceeds the cap of 24");

    std::set<KVec> image;
    for (uint64_t f = 0; f < (uint64_t{1} << m); ++f) {
        // Darts covered per vertex.
        std::vector<std::vector<uint32_t>> darts(n);
        bool even = true;
        for (std::size_t e = 0; e < m && even; ++e) {
            if (!((f >> e) & 1)) continue;
            auto [d1, d2] = g.edges()[e];
            darts[FourRegularGraph::vertex_of(d1)].push_back(d1);
            darts[FourRegularGraph::vertex_of(d2)].push_back(d2);
        }
        KVec vec = 0;
        for (std::size_t v = 0; v < n && even; ++v) {
            if (darts[v].size() % 2) {
                even = false;  // not in the cycle space
                break;
            }
            if (darts[v].size() == 2) {
                int pairing = FourRegularGraph::pairing_joining(darts[v][0], darts[v][1]);
                vec |= klein::unit(v, lam.lam[v][pairing]);
            }
        }
        if (even) image.insert(vec);
    }

    // The image must be a subspace of dimension n: 2^n members whose span
    // has rank n.
    std::vector<uint64_t> rows(image.begin(), image.end());
    std::size_t rank = gf2_rank(rows);
    if (rank != n || image.size() != (std::size_t{1} << n))
        throw ValidationError("cycle-space image is not a subspace of dimension |V|");
    std::vector<KVec> basis;
    for (KVec v : image) {
        std::vector<uint64_t> test(basis.begin(), basis.end());
        test.push_back(v);
        if (gf2_rank(std::move(test)) > basis.size()) basis.push_back(v);
        if (basis.size() == n) break;
    }
    return IsotropicSystem(n, std::move(basis));
}

KVec inconsistent_vector(const TwoInTwoOutDigraph& d, const TransitionLabeling& lam) {
    KVec v = 0;
    for (std::size_t i = 0; i < d.order(); ++i)
        v |= klein::unit(i, lam.lam[i][d.inconsistent_pairing(i)]);
    return v;
}

}  // namespace interlace
