#include "interlace/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "interlace/error.hpp"

namespace interlace {

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

Graph::Graph(std::size_t n) : Graph(numbered_labels(n)) {}

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
    if (labels_.size() > kMaxVertices)
        throw SizeCapError("graph order " + std::to_string(labels_.size()) +
                           " exceeds cap of " + std::to_string(kMaxVertices));
}

Graph Graph::edgeless(std::size_t n) { return Graph(n); }

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

std::size_t Graph::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw InvalidIndexError("unknown vertex '" + label + "'");
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= order() || v >= order()) throw InvalidIndexError("vertex index out of range");
    return (adj_[u] >> v) & 1;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= order() || v >= order()) throw InvalidIndexError("vertex index out of range");
    if (u == v) {
        loops_ |= uint64_t{1} << v;
        return;
    }
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
}

void Graph::set_loop(std::size_t v, bool on) {
    if (v >= order()) throw InvalidIndexError("vertex index out of range");
    if (on)
        loops_ |= uint64_t{1} << v;
    else
        loops_ &= ~(uint64_t{1} << v);
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(adj_[v]));
}

uint64_t Graph::full_mask() const {
    return order() == 64 ? ~uint64_t{0} : (uint64_t{1} << order()) - 1;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (uint64_t row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
        for (uint64_t rest = adj_[u] >> (u + 1) << (u + 1); rest;) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    return out;
}

Gf2Matrix Graph::adjacency_matrix() const {
    Gf2Matrix m(labels_);
    for (std::size_t u = 0; u < order(); ++u) {
        for (uint64_t rest = adj_[u]; rest;) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            m.set_sym(u, v, true);
        }
        if (looped(u)) m.set_sym(u, u, true);
    }
    return m;
}

Graph Graph::local_complement(std::size_t v) const {
    if (v >= order()) throw InvalidIndexError("vertex index out of range");
    Graph g = *this;
    uint64_t nv = adj_[v];
    for (uint64_t rest = nv; rest;) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        g.adj_[u] ^= nv & ~(uint64_t{1} << u);
    }
    return g;
}

Graph Graph::local_complement_looped(std::size_t v) const {
    Graph g = local_complement(v);
    g.loops_ ^= adj_[v];
    return g;
}

Graph Graph::pivot(std::size_t a, std::size_t b) const {
    if (!has_edge(a, b)) throw PivotError("pivot undefined: " + labels_[a] + labels_[b] +
                                          " is not an edge");
    if (looped(a) || looped(b))
        throw PivotError("unsupported pivot: endpoint of " + labels_[a] + labels_[b] +
                         " is looped");
    uint64_t na = adj_[a] & ~(uint64_t{1} << b);
    uint64_t nb = adj_[b] & ~(uint64_t{1} << a);
    uint64_t only_a = na & ~nb;
    uint64_t only_b = nb & ~na;
    uint64_t both = na & nb;
    Graph g = *this;
    auto toggle_between = [&g](uint64_t s1, uint64_t s2) {
        for (uint64_t rest = s1; rest;) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            g.adj_[u] ^= s2;
        }
        for (uint64_t rest = s2; rest;) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            g.adj_[u] ^= s1;
        }
    };
    toggle_between(only_a, only_b);
    toggle_between(only_a, both);
    toggle_between(only_b, both);
    return g;
}

Graph Graph::loop_complement(uint64_t s) const {
    if (s & ~full_mask()) throw InvalidIndexError("loop complement set out of range");
    Graph g = *this;
    g.loops_ ^= s;
    return g;
}

Graph Graph::with_labels_swapped(std::size_t a, std::size_t b) const {
    if (a >= order() || b >= order()) throw InvalidIndexError("vertex index out of range");
    Graph g = *this;
    std::swap(g.labels_[a], g.labels_[b]);
    return g;
}

Graph Graph::delete_vertex(std::size_t v) const {
    if (v >= order()) throw InvalidIndexError("vertex index out of range");
    return induced(full_mask() & ~(uint64_t{1} << v));
}

Graph Graph::induced(uint64_t mask) const {
    std::vector<std::string> labels;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < order(); ++i)
        if ((mask >> i) & 1) {
            labels.push_back(labels_[i]);
            keep.push_back(i);
        }
    Graph g(std::move(labels));
    for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t c = r + 1; c < keep.size(); ++c)
            if (has_edge(keep[r], keep[c])) g.add_edge(r, c);
        if (looped(keep[r])) g.set_loop(r, true);
    }
    return g;
}

std::size_t Graph::components() const {
    std::size_t n = order();
    uint64_t seen = 0;
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if ((seen >> v) & 1) continue;
        ++count;
        uint64_t frontier = uint64_t{1} << v;
        while (frontier) {
            seen |= frontier;
            uint64_t next = 0;
            for (uint64_t rest = frontier; rest;) {
                std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
                rest &= rest - 1;
                next |= adj_[u];
            }
            frontier = next & ~seen;
        }
    }
    return count;
}

std::size_t Graph::independence_number() const {
    // Branch on the lowest remaining vertex: either exclude it or take it
    // and discard its neighborhood.
    std::size_t best = 0;
    auto rec = [&](auto&& self, uint64_t avail, std::size_t size) -> void {
        if (size + static_cast<std::size_t>(std::popcount(avail)) <= best) return;
        if (!avail) {
            if (size > best) best = size;
            return;
        }
        std::size_t v = static_cast<std::size_t>(std::countr_zero(avail));
        uint64_t bit = uint64_t{1} << v;
        self(self, avail & ~bit & ~adj_[v], size + 1);
        self(self, avail & ~bit, size);
    };
    rec(rec, full_mask(), 0);
    return best;
}

std::string Graph::canonical_key() const {
    // Order vertices by label, then encode adjacency and loops.
    std::vector<std::size_t> order_idx(order());
    for (std::size_t i = 0; i < order(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(),
              [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
    std::string key;
    for (std::size_t i : order_idx) {
        key += labels_[i];
        key += '\x1f';
    }
    key += '|';
    for (std::size_t r = 0; r < order(); ++r) {
        for (std::size_t c = 0; c < order(); ++c)
            key += has_edge(order_idx[r], order_idx[c]) ? '1' : '0';
        key += looped(order_idx[r]) ? 'L' : '.';
    }
    return key;
}

bool Graph::operator==(const Graph& o) const {
    if (order() != o.order()) return false;
    std::vector<std::size_t> map(order());
    for (std::size_t i = 0; i < order(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < o.order(); ++j)
            if (o.labels_[j] == labels_[i]) {
                map[i] = j;
                found = true;
                break;
            }
        if (!found) return false;
    }
    for (std::size_t i = 0; i < order(); ++i) {
        if (looped(i) != o.looped(map[i])) return false;
        for (std::size_t j = 0; j < order(); ++j)
            if (has_edge(i, j) != o.has_edge(map[i], map[j])) return false;
    }
    return true;
}

GraphStats graph_stats(const Graph& g, std::size_t orbit_cap) {
    GraphStats stats;
    stats.components = g.components();
    stats.independence_number = g.independence_number();

    // Closure of {g} under pivots on edges; vertex labels stay fixed, so
    // members are compared by their canonical byte encoding.
    std::set<std::string> seen;
    std::vector<Graph> frontier{g};
    seen.insert(g.canonical_key());
    stats.orbit_max_independence = stats.independence_number;
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.back());
        frontier.pop_back();
        for (auto [a, b] : cur.edges()) {
            if (cur.looped(a) || cur.looped(b)) continue;
            Graph next = cur.pivot(a, b);
            if (seen.insert(next.canonical_key()).second) {
                std::size_t alpha = next.independence_number();
                if (alpha > stats.orbit_max_independence) stats.orbit_max_independence = alpha;
                if (seen.size() > orbit_cap) {
                    stats.orbit_size = seen.size();
                    stats.orbit_capped = true;
                    return stats;
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    stats.orbit_size = seen.size();
    return stats;
}

}  // namespace interlace
