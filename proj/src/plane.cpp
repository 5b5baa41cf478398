#include "interlace/plane.hpp"

#include <numeric>

#include "interlace/error.hpp"

namespace interlace {

std::size_t MultiGraph::components() const {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (find(v) == v) ++count;
    return count;
}

bool MultiGraph::is_bridge(std::size_t edge_id) const {
    if (is_loop(edge_id)) return false;
    return delete_edge(edge_id).components() == components() + 1;
}

MultiGraph MultiGraph::delete_edge(std::size_t edge_id) const {
    MultiGraph g{n, edges};
    g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(edge_id));
    return g;
}

MultiGraph MultiGraph::contract_edge(std::size_t edge_id) const {
    auto [a, b] = edges[edge_id];
    if (a == b) return delete_edge(edge_id);
    if (a > b) std::swap(a, b);
    MultiGraph g;
    g.n = n - 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i == edge_id) continue;
        auto remap = [&](std::size_t v) { return v == b ? a : (v > b ? v - 1 : v); };
        g.edges.emplace_back(remap(edges[i].first), remap(edges[i].second));
    }
    return g;
}

IntPoly2 tutte(const MultiGraph& g) {
    std::size_t bridges = 0, loops = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.is_loop(e)) {
            ++loops;
        } else if (g.is_bridge(e)) {
            ++bridges;
        } else {
            return tutte(g.delete_edge(e)) + tutte(g.contract_edge(e));
        }
    }
    return IntPoly2::monomial(static_cast<unsigned>(bridges), static_cast<unsigned>(loops));
}

PlaneGraph::PlaneGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges,
                       std::vector<std::vector<uint32_t>> rotation)
    : n_(n), edges_(std::move(edges)), rotation_(std::move(rotation)) {
    if (rotation_.size() != n_)
        throw ValidationError("rotation must list every vertex");
    std::size_t ends = 2 * edges_.size();
    // Every edge end appears exactly once, at the vertex it belongs to.
    std::vector<int> seen_at(ends, -1);
    for (std::size_t v = 0; v < n_; ++v)
        for (uint32_t end : rotation_[v]) {
            if (end >= ends) throw ValidationError("rotation names an unknown edge end");
            if (seen_at[end] >= 0) throw ValidationError("edge end listed twice in rotation");
            seen_at[end] = static_cast<int>(v);
            std::size_t expect =
                (end & 1) ? edges_[end >> 1].second : edges_[end >> 1].first;
            if (expect != v)
                throw ValidationError("edge end " + std::to_string(end) +
                                      " listed at the wrong vertex");
        }
    for (std::size_t e = 0; e < ends; ++e)
        if (seen_at[e] < 0) throw ValidationError("edge end missing from rotation");

    // Face tracing: successor of an end is the next end counterclockwise
    // around its vertex after crossing the edge.
    std::vector<uint32_t> next_at(ends);
    for (std::size_t v = 0; v < n_; ++v)
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            uint32_t end = rotation_[v][i];
            next_at[end] = rotation_[v][(i + 1) % rotation_[v].size()];
        }
    auto other = [](uint32_t end) { return end ^ 1u; };
    std::vector<bool> visited(ends, false);
    std::size_t traced = 0;
    for (std::size_t start = 0; start < ends; ++start) {
        if (visited[start]) continue;
        ++traced;
        uint32_t cur = static_cast<uint32_t>(start);
        while (!visited[cur]) {
            visited[cur] = true;
            cur = next_at[other(cur)];
        }
    }

    // Tracing visits each component separately, so every edged component
    // must satisfy v - e + f = 2 on its own; isolated vertices trace
    // nothing. Any positive genus shows up as a deficit here.
    std::size_t isolated = 0;
    for (std::size_t v = 0; v < n_; ++v)
        if (rotation_[v].empty()) ++isolated;
    std::size_t edged_components = to_multigraph().components() - isolated;
    long euler = static_cast<long>(n_ - isolated) - static_cast<long>(edges_.size()) +
                 static_cast<long>(traced);
    if (euler != 2 * static_cast<long>(edged_components))
        throw ValidationError("rotation system is not planar: per-component v - e + f = " +
                              std::to_string(euler) + ", expected " +
                              std::to_string(2 * edged_components));
    // Faces of the plane embedding: components share one outer face.
    faces_ = edged_components ? traced - edged_components + 1 : 1;
}

TwoInTwoOutDigraph PlaneGraph::oriented_medial() const {
    if (edges_.empty()) throw ValidationError("medial graph requires at least one edge");
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    // Corners around each vertex, counterclockwise: the medial vertex of
    // each incident edge points to the next one.
    for (std::size_t v = 0; v < n_; ++v) {
        const auto& rot = rotation_[v];
        for (std::size_t i = 0; i < rot.size(); ++i)
            arcs.emplace_back(rot[i] >> 1, rot[(i + 1) % rot.size()] >> 1);
    }
    return TwoInTwoOutDigraph::from_arcs(edges_.size(), arcs);
}

}  // namespace interlace
