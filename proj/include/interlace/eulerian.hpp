#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/poly.hpp"
#include "interlace/rng.hpp"

namespace interlace {

// 4-regular multigraph in the dart (half-edge) model: vertex v owns darts
// 4v..4v+3 and theta pairs darts into edges. Loops and multi-edges are
// first-class. A transition at a vertex is one of the three pairings of
// its four darts; a transition system induces a partition of the edge set
// into closed circuits.
class FourRegularGraph {
public:
    static constexpr std::size_t kMaxVertices = 16;

    // Edges as vertex pairs; a loop is (v, v). Every vertex must end up
    // with exactly four darts.
    static FourRegularGraph from_edges(std::size_t n,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t order() const { return n_; }
    std::size_t dart_count() const { return 4 * n_; }
    std::size_t edge_count() const { return 2 * n_; }
    uint32_t theta(uint32_t dart) const { return theta_[dart]; }
    static std::size_t vertex_of(uint32_t dart) { return dart / 4; }

    // Edges as dart pairs (smaller dart first), indexed by edge id.
    const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }

    std::size_t components() const;

    // Local pairings: 0 -> (0,1)(2,3), 1 -> (0,2)(1,3), 2 -> (0,3)(1,2).
    static uint32_t pairing_partner(int pairing, uint32_t local_dart);
    uint32_t transition_partner(int pairing, uint32_t dart) const;
    // The pairing that joins two distinct darts of the same vertex.
    static int pairing_joining(uint32_t dart_a, uint32_t dart_b);

private:
    std::size_t n_ = 0;
    std::vector<uint32_t> theta_;
    std::vector<std::pair<uint32_t, uint32_t>> edges_;
};

// One pairing choice per vertex.
struct TransitionSystem {
    std::vector<uint8_t> pairing;
    bool operator==(const TransitionSystem& o) const { return pairing == o.pairing; }
    bool operator<(const TransitionSystem& o) const { return pairing < o.pairing; }
};

// Circuits induced by a transition system: one dart cycle per circuit, in a
// canonical direction with the minimal dart first.
struct CircuitPartition {
    TransitionSystem system;
    std::vector<std::vector<uint32_t>> circuits;
    std::size_t size() const { return circuits.size(); }  // |T|
};

CircuitPartition trace(const FourRegularGraph& g, const TransitionSystem& ts);
std::size_t circuit_count(const FourRegularGraph& g, const TransitionSystem& ts);

// Streams every transition system (3^n of them) with its circuit count.
void for_each_transition_system(
    const FourRegularGraph& g,
    const std::function<void(const TransitionSystem&, std::size_t)>& fn);

// Martin polynomial of a 4-regular graph: sum of (x-2)^{|T| - k(G)}.
IntPoly1 martin_undirected(const FourRegularGraph& g);

// Two-in two-out digraph: a 4-regular host plus an orientation with
// indegree = outdegree = 2 everywhere. Transitions must pair in-darts with
// out-darts, leaving two consistent pairings per vertex.
class TwoInTwoOutDigraph {
public:
    static TwoInTwoOutDigraph from_arcs(std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

    const FourRegularGraph& host() const { return host_; }
    std::size_t order() const { return host_.order(); }
    bool dart_is_out(uint32_t dart) const { return (out_mask_ >> dart) & 1; }

    std::array<int, 2> consistent_pairings(std::size_t v) const;
    int inconsistent_pairing(std::size_t v) const;
    bool system_is_consistent(const TransitionSystem& ts) const;

private:
    FourRegularGraph host_;
    uint64_t out_mask_ = 0;  // dart_count <= 64 given the vertex cap
};

CircuitPartition trace_directed(const TwoInTwoOutDigraph& d, const TransitionSystem& ts);

// Streams every orientation-consistent transition system (2^n).
void for_each_directed_system(
    const TwoInTwoOutDigraph& d,
    const std::function<void(const TransitionSystem&, std::size_t)>& fn);

// Martin polynomial of a two-in two-out digraph: sum of (x-1)^{|T| - k(G)}.
IntPoly1 martin_directed(const TwoInTwoOutDigraph& d);

// All Eulerian systems (one circuit per component). For a connected host
// these are the Eulerian circuits.
std::vector<TransitionSystem> euler_systems_directed(const TwoInTwoOutDigraph& d);
std::vector<TransitionSystem> euler_systems_undirected(const FourRegularGraph& g);

// Independent circuit counter: a backtracking walk that fixes each vertex
// pairing the first time the walk passes through. Requires a connected
// host; circuits are counted up to rotation.
uint64_t count_euler_circuits_backtracking(const TwoInTwoOutDigraph& d);

// Double occurrence words of an Eulerian system, one per circuit, as vertex
// index sequences.
std::vector<std::vector<std::size_t>> circuit_words(const FourRegularGraph& g,
                                                    const CircuitPartition& part);

// Interlace graph of an Eulerian system: vertices of the host, edges
// between pairs that alternate a..b..a..b along their circuit. Vertices on
// different circuits are never adjacent. Throws ValidationError when the
// partition is not an Eulerian system.
Graph interlace_graph(const FourRegularGraph& g, const CircuitPartition& part);

bool interlaced(const FourRegularGraph& g, const CircuitPartition& part, std::size_t a,
                std::size_t b);

// Transposition of an Eulerian system at an interlaced pair: switches the
// consistent pairing at both vertices; the result is again an Eulerian
// system.
TransitionSystem transpose(const TwoInTwoOutDigraph& d, const TransitionSystem& c,
                           std::size_t a, std::size_t b);

// Both sides of the circuit-partition nullity identity: |P| - k(G) on the
// left, and the nullity of (H(C)+Z)[Y u Z] on the right, where Y and Z
// split the vertices where P deviates from the Eulerian system C by
// whether the deviation follows C's orientation.
std::pair<std::size_t, std::size_t> cohn_lempel_sides(const FourRegularGraph& g,
                                                      const TransitionSystem& c,
                                                      const TransitionSystem& p);

// Builds the host and circuit realizing a double occurrence word: arcs
// follow consecutive letters cyclically. The word must use each vertex
// 0..n-1 exactly twice.
std::pair<TwoInTwoOutDigraph, CircuitPartition> digraph_from_word(
    const std::vector<std::size_t>& word);

// Deterministic random hosts for the cross-validation suites.
TwoInTwoOutDigraph random_two_in_two_out(SplitMix64& rng, std::size_t n,
                                         bool require_connected = true);
FourRegularGraph random_four_regular(SplitMix64& rng, std::size_t n,
                                     bool require_connected = true);

}  // namespace interlace
