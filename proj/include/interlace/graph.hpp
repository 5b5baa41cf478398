#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "interlace/gf2.hpp"

namespace interlace {

// Looped simple graph: no multi-edges, loops allowed, v never adjacent to
// itself through the edge relation even when looped. Vertices carry opaque
// string labels; all operations preserve labels. Values are immutable in
// use: the mutating members exist for construction and every operation
// returns a fresh graph.
class Graph {
public:
    static constexpr std::size_t kMaxVertices = 64;

    Graph() = default;
    explicit Graph(std::size_t n);  // labels "0".."n-1"
    explicit Graph(std::vector<std::string> labels);

    static Graph edgeless(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);  // 0-1-2-...-(n-1)

    std::size_t order() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_[v]; }
    std::size_t index_of(const std::string& label) const;  // InvalidIndexError

    bool has_edge(std::size_t u, std::size_t v) const;
    // u == v adds a loop.
    void add_edge(std::size_t u, std::size_t v);
    void set_loop(std::size_t v, bool on);
    bool looped(std::size_t v) const { return (loops_ >> v) & 1; }
    uint64_t loops_mask() const { return loops_; }
    uint64_t neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const;
    uint64_t full_mask() const;

    bool is_simple() const { return loops_ == 0; }
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u < v

    // Adjacency matrix over GF(2); diagonal entry 1 exactly at loops.
    Gf2Matrix adjacency_matrix() const;

    // --- operations ---
    // G*v: toggles edges inside the open neighborhood of v; loops unchanged.
    Graph local_complement(std::size_t v) const;
    // Variant used when eliminating a looped vertex: additionally toggles
    // the loop state of every neighbor of v (matches the principal pivot
    // transform on the 1x1 block at v).
    Graph local_complement_looped(std::size_t v) const;
    // G^{ab}: requires edge ab with both endpoints unlooped; toggles all
    // pairs between the three neighbor classes; no label swap.
    Graph pivot(std::size_t a, std::size_t b) const;
    // G+S: toggles loop status exactly on S.
    Graph loop_complement(uint64_t s) const;
    Graph with_labels_swapped(std::size_t a, std::size_t b) const;
    Graph delete_vertex(std::size_t v) const;
    Graph induced(uint64_t mask) const;

    std::size_t components() const;
    std::size_t independence_number() const;

    // Byte encoding of the labeled graph (labels sorted), usable as a
    // memoization key.
    std::string canonical_key() const;

    // Labeled-graph equality: same label set, same adjacency and loops
    // between equal labels.
    bool operator==(const Graph& o) const;
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::vector<uint64_t> adj_;
    uint64_t loops_ = 0;
};

struct GraphStats {
    std::size_t components = 0;
    std::size_t independence_number = 0;
    std::size_t orbit_max_independence = 0;
    std::size_t orbit_size = 0;
    bool orbit_capped = false;  // partial result flag when the cap was hit
};

// Component count, independence number, and the maximum independence
// number over the closure of G under pivots on edges. The orbit closure is
// brute force; when it exceeds `orbit_cap` the partial maximum is returned
// with orbit_capped set.
GraphStats graph_stats(const Graph& g, std::size_t orbit_cap = 200000);

}  // namespace interlace
