#pragma once

#include <cstdint>
#include <vector>

#include "interlace/eulerian.hpp"
#include "interlace/graph.hpp"
#include "interlace/poly.hpp"
#include "interlace/rng.hpp"

namespace interlace {

// Vectors over the Klein four-group K = {0, x, y, z}, one entry per vertex,
// packed two bits per coordinate (so at most 32 coordinates). Addition is
// XOR. The bilinear form pairs two entries to 1 exactly when they are
// distinct and both nonzero; the letters map to bit pairs as x -> 01,
// y -> 10, z -> 11 (low bit first). Any form-preserving encoding would do;
// nothing downstream depends on the letter names.
namespace klein {

using KVec = uint64_t;

constexpr unsigned kZero = 0, kX = 1, kY = 2, kZ = 3;
constexpr std::size_t kMaxCoords = 32;

inline unsigned entry(KVec v, std::size_t i) { return (v >> (2 * i)) & 3; }
inline KVec with_entry(KVec v, std::size_t i, unsigned value) {
    return (v & ~(KVec{3} << (2 * i))) | (KVec{value} << (2 * i));
}
inline KVec unit(std::size_t i, unsigned value) { return KVec{value} << (2 * i); }

bool all_nonzero(KVec v, std::size_t n);
// Sum over coordinates of the Klein form.
unsigned form(KVec a, KVec b, std::size_t n);

}  // namespace klein

// Isotropic system (V, L): L a self-orthogonal subspace of K^V of dimension
// |V|, held by a GF(2) basis of |V| packed vectors. Construction validates
// both the dimension and the isotropy.
class IsotropicSystem {
public:
    IsotropicSystem(std::size_t n, std::vector<klein::KVec> basis);

    std::size_t order() const { return n_; }
    const std::vector<klein::KVec>& basis() const { return basis_; }

    // dim(L meet X-hat) where X-hat restricts each coordinate to {0, X_v};
    // X must have no zero entry.
    std::size_t dim_meet_hat(klein::KVec x) const;

    bool contains(klein::KVec v) const;
    // All 2^n members of L.
    std::vector<klein::KVec> enumerate() const;

private:
    std::size_t n_ = 0;
    std::vector<klein::KVec> basis_;
};

// Restricted Tutte-Martin polynomial with respect to C: sum over the 2^n
// complete vectors X avoiding C coordinatewise of (x-1)^{dim(L meet X-hat)}.
IntPoly1 restricted_tm(const IsotropicSystem& s, klein::KVec c);

// Global Tutte-Martin polynomial: sum over all 3^n complete vectors of
// (x-2)^{dim(L meet X-hat)}.
IntPoly1 global_tm(const IsotropicSystem& s);

// Graphic presentation (G, A, B): L is spanned by A|{v} + B|N(v). Requires
// complete vectors with A_v != B_v everywhere.
IsotropicSystem from_graphic_presentation(const Graph& g, klein::KVec a, klein::KVec b);

// Default presentation vectors: A_v = x and B_v = y for every v.
klein::KVec presentation_all(std::size_t n, unsigned value);

// Per-vertex bijection from the three transitions to K' = {x, y, z};
// lam[v][pairing] is the Klein letter of that pairing.
struct TransitionLabeling {
    std::vector<std::array<uint8_t, 3>> lam;

    static TransitionLabeling identity(std::size_t n);
    static TransitionLabeling random(SplitMix64& rng, std::size_t n);
    klein::KVec of(const TransitionSystem& ts) const;
};

// Isotropic system of a 4-regular graph: the image of the cycle space
// under the transition labeling. The image is enumerated member by member
// (the map is not linear on edge sets) and validated to be a subspace of
// dimension |V|.
IsotropicSystem from_four_regular(const FourRegularGraph& g, const TransitionLabeling& lam);

// The complete vector labeling the orientation-inconsistent transition at
// every vertex of a two-in two-out digraph. Summing the restricted
// Tutte-Martin polynomial against it ranges exactly over the consistent
// transition systems, which is what ties it to the directed Martin
// polynomial.
klein::KVec inconsistent_vector(const TwoInTwoOutDigraph& d, const TransitionLabeling& lam);

}  // namespace interlace
