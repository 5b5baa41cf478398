#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "interlace/gf2.hpp"
#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

// Interlace polynomials of graphs and symmetric GF(2) matrices. Each
// polynomial is computable by two independent pipelines: a subset state
// sum over principal-submatrix nullities, and the defining recursion.
// Pipeline agreement is the core cross-check of the whole engine.

// Sum over vertex subsets T of (x-1)^{nullity A(G)[T]}. Loops enter
// through the adjacency diagonal.
IntPoly1 q_nullity_statesum(const Graph& g);

// Two-branch recursion on a deterministically chosen edge (lexicographically
// smallest by labels); base case x^n on edgeless graphs. Simple graphs only;
// looped input raises UnsupportedInputError pointing at the two-variable
// route.
IntPoly1 q_nullity_recursive(const Graph& g);

// Extension of the one-variable polynomial to looped graphs: the
// two-variable polynomial evaluated at x = 2.
IntPoly1 q_nullity_looped(const Graph& g);

// Sum over T and S subset of T of (x-2)^{nullity (G+S)[T]}, 3^n terms.
IntPoly1 Q_statesum(const Graph& g);

// Three-branch recursion (delete / local complement / pivot) on simple
// graphs; looped input raises UnsupportedInputError (the state sum serves
// looped graphs).
IntPoly1 Q_recursive(const Graph& g);

// Sum over T of (x-1)^{rank} (y-1)^{nullity} of A(G)[T].
IntPoly2 q_twovar_statesum(const Graph& g);

// Recursion: an edge with unlooped endpoints when one exists, otherwise a
// looped vertex (eliminated by the loop-toggling local complement),
// otherwise the base case y^n.
IntPoly2 q_twovar_recursive(const Graph& g);

// Matrix versions: the state sum for any symmetric GF(2) matrix, and the
// recursion through the principal pivot transform.
IntPoly1 q_matrix_statesum(const Gf2Matrix& a);
IntPoly1 q_matrix_recursive(const Gf2Matrix& a);

// --- counting oracles (independent of the rank machinery) ---
// Number of induced subgraphs with an odd number of perfect matchings; the
// empty subgraph counts 1. A loop may match its own vertex.
uint64_t count_odd_pm_subsets(const Graph& g);
// Number of induced subgraphs in which every degree is even (the empty
// subgraph included).
uint64_t count_even_subgraphs(const Graph& g);
// Number of pairs (T, loops added on S subset of T) whose general perfect
// matching count is odd; matchings may use the added loops.
uint64_t count_odd_general_pm(const Graph& g);

// Evaluations of q_N and Q at the special points, the oracle counts, and
// one pass flag per identity.
struct EvaluationReport {
    std::string graph_id;
    std::size_t n = 0;
    bool simple = true;

    BigInt q_at_m1, q_at_0, q_at_1, q_at_2, q_at_3;
    BigInt bigq_at_0, bigq_at_2, bigq_at_3, bigq_at_4;

    uint64_t oracle_odd_pm = 0;
    uint64_t oracle_even_subgraphs = 0;   // simple graphs only
    uint64_t oracle_odd_general_pm = 0;   // simple graphs only

    bool q1_matches_oracle = false;
    bool q2_is_power_of_two = false;
    bool q0_is_zero = false;              // simple graphs only
    bool qm1_closed_form = false;
    bool q3_odd_multiple_of_qm1 = false;
    bool bigq0_is_zero = false;           // simple graphs only
    bool bigq3_is_power_of_three = false;
    bool bigq4_matches_oracle = false;
    bool bigq2_matches_oracle = false;

    bool all_pass() const;
};

EvaluationReport evaluation_report(const Graph& g, std::string graph_id = "");

}  // namespace interlace
