#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "interlace/eulerian.hpp"
#include "interlace/poly.hpp"

namespace interlace {

// Multigraph with edge identities, for deletion-contraction work. Loops
// and parallel edges allowed.
struct MultiGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t components() const;
    bool is_bridge(std::size_t edge_id) const;
    bool is_loop(std::size_t edge_id) const {
        return edges[edge_id].first == edges[edge_id].second;
    }
    MultiGraph delete_edge(std::size_t edge_id) const;
    MultiGraph contract_edge(std::size_t edge_id) const;
};

// Tutte polynomial by deletion-contraction on the smallest eligible edge
// id; base case x^bridges y^loops.
IntPoly2 tutte(const MultiGraph& g);

// Combinatorial plane graph: a rotation system. Every edge has two ends,
// end id 2*edge for the first endpoint and 2*edge+1 for the second; the
// rotation at a vertex lists its incident ends in counterclockwise order.
// Faces come from face tracing, and Euler's formula v - e + f = 1 + k is
// validated on construction.
class PlaneGraph {
public:
    PlaneGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges,
               std::vector<std::vector<uint32_t>> rotation);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t face_count() const { return faces_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    MultiGraph to_multigraph() const { return {n_, edges_}; }

    // Oriented medial graph: one vertex per edge, one arc per face corner,
    // directed counterclockwise around each vertex (the black faces).
    // Requires at least one edge.
    TwoInTwoOutDigraph oriented_medial() const;

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<uint32_t>> rotation_;
    std::size_t faces_ = 0;
};

}  // namespace interlace
