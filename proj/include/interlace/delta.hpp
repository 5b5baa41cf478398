#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

// Set system (E, F): a finite ground set with a family of feasible subsets,
// subsets held as bit masks over the ground order. Delta-matroids are the
// set systems passing the symmetric exchange axiom; that check is offered
// as a predicate rather than enforced, since several operations (loop
// complement in particular) leave the class.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(std::vector<std::string> ground, std::vector<uint64_t> feasible);

    static SetSystem with_numbered_ground(std::size_t n, std::vector<uint64_t> feasible);

    std::size_t ground_size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<uint64_t>& feasible() const { return feasible_; }  // sorted, unique
    std::size_t index_of(const std::string& label) const;                // InvalidIndexError
    uint64_t full_mask() const;
    bool proper() const { return !ground_.empty(); }

    bool is_feasible(uint64_t set) const;
    bool is_coloop(std::size_t e) const;  // e in every feasible set
    bool is_loop(std::size_t e) const;    // e in no feasible set

    // Ground-shrinking minors; the coloop/loop fallbacks of the definition
    // apply, so both are total.
    SetSystem delete_elem(std::size_t e) const;
    SetSystem contract(std::size_t e) const;

    // Twist M*X: symmetric difference of every feasible set with X.
    SetSystem twist(uint64_t x) const;
    // Loop complement M+e: toggles membership of F u {e} for every
    // feasible F avoiding e.
    SetSystem loop_complement(std::size_t e) const;
    // M+X: loop complements over X in any order (they commute).
    SetSystem loop_complement_set(uint64_t x) const;
    // Dual pivot: twist, loop complement, twist at one point.
    SetSystem dual_pivot(std::size_t e) const;
    SetSystem dual_pivot_set(uint64_t x) const;

    // Minimum |F delta X| over feasible F; EmptyFamilyError when F is empty.
    std::size_t distance(uint64_t x) const;

    bool operator==(const SetSystem& o) const;

private:
    std::vector<std::string> ground_;
    std::vector<uint64_t> feasible_;
};

// Operation tokens for the single-entry transform surface.
struct OpDelete { std::size_t e; };
struct OpContract { std::size_t e; };
struct OpTwist { uint64_t x; };
struct OpLoopComplement { uint64_t x; };
struct OpDualPivot { std::size_t e; };
using SetSystemOp = std::variant<OpDelete, OpContract, OpTwist, OpLoopComplement, OpDualPivot>;

SetSystem apply_op(const SetSystem& s, const SetSystemOp& op);

// Symmetric exchange axiom over all ordered feasible pairs.
bool symmetric_exchange_check(const SetSystem& s);

// Feasible sets are matroid bases: nonempty, equicardinal, exchange holds.
bool is_matroid_bases(const SetSystem& s);

// Feasible sets of the adjacency delta-matroid: subsets whose principal
// adjacency submatrix is invertible over GF(2); the empty set is always
// feasible.
SetSystem adjacency_delta_matroid(const Graph& g);

// Interlace polynomial of a set system: sum over X of x^{d(X)}.
IntPoly1 q_delta(const SetSystem& s);
// Recursive evaluation through twists and deletions; cross-checks q_delta.
IntPoly1 q_delta_recursive(const SetSystem& s);

// Sum over X and Z subset of X of x^{d_{M+Z}(X)}. Raises
// UndefinedDistanceError naming Z when a loop complement empties the
// family.
IntPoly1 q_delta_global(const SetSystem& s);

// Two-variable polynomial: sum over X of x^{|X|} y^{d(X)}.
IntPoly2 q_bar(const SetSystem& s);
// The form printed with (y-1)^{d(X)} in place of y^{d(X)}; kept as a
// diagnostic because it fails the relation to the two-variable graph
// polynomial that the adopted form satisfies.
IntPoly2 q_bar_printed(const SetSystem& s);

// Tutte polynomial of a matroid given by bases; NotAMatroidError otherwise.
IntPoly2 tutte_matroid(const SetSystem& s);

// Uniform matroid U_{k,m} on ground 0..m-1.
SetSystem uniform_matroid(std::size_t k, std::size_t m);

enum class VfSafety { Safe, Unsafe, Unknown };

// vf-safety: closure under all twist/loop-complement words. `known_binary`
// short-circuits to Safe (binary delta-matroids are vf-safe); otherwise a
// bounded orbit search answers definitively for small ground sets and
// reports Unknown beyond the cap.
VfSafety vf_safe(const SetSystem& s, bool known_binary, std::size_t ground_cap = 4);

// Diagnostic for the evaluation at -2, whose printed right-hand side has a
// distance with no argument: reports d at the empty set after dual-pivoting
// every element, and whether (-1)^n (-2)^d matches q_delta(-2).
struct DualPivotEvaluation {
    std::size_t d_empty = 0;
    BigInt lhs, rhs;
    bool identity_holds = false;
};
DualPivotEvaluation dual_pivot_evaluation(const SetSystem& s);

}  // namespace interlace
