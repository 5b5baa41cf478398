#include "interlace/eulerian.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "interlace/error.hpp"

namespace interlace {

namespace {

// partner_local[p][i]: the local dart paired with i under pairing p.
constexpr uint32_t kPartnerLocal[3][4] = {
    {1, 0, 3, 2},  // (0,1)(2,3)
    {2, 3, 0, 1},  // (0,2)(1,3)
    {3, 2, 1, 0},  // (0,3)(1,2)
};

}  // namespace

FourRegularGraph FourRegularGraph::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n > kMaxVertices)
        throw SizeCapError("4-regular host order " + std::to_string(n) + " exceeds cap of " +
                           std::to_string(kMaxVertices));
    FourRegularGraph g;
    g.n_ = n;
    g.theta_.assign(4 * n, UINT32_MAX);
    std::vector<uint32_t> used(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InvalidIndexError("edge endpoint out of range");
        if (used[u] >= 4 || (u == v && used[u] >= 3) || used[v] >= 4)
            throw ValidationError("vertex " + std::to_string(used[u] >= 4 ? u : v) +
                                  " has more than four dart slots");
        uint32_t du = static_cast<uint32_t>(4 * u + used[u]++);
        uint32_t dv = static_cast<uint32_t>(4 * v + used[v]++);
        g.theta_[du] = dv;
        g.theta_[dv] = du;
        g.edges_.emplace_back(std::min(du, dv), std::max(du, dv));
    }
    for (std::size_t v = 0; v < n; ++v)
        if (used[v] != 4)
            throw ValidationError("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(used[v]) + ", expected 4");
    return g;
}

std::size_t FourRegularGraph::components() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges_) parent[find(vertex_of(a))] = find(vertex_of(b));
    std::size_t count = 0;
    for (std::size_t v = 0; v < n_; ++v)
        if (find(v) == v) ++count;
    return count;
}

uint32_t FourRegularGraph::pairing_partner(int pairing, uint32_t local_dart) {
    return kPartnerLocal[pairing][local_dart];
}

uint32_t FourRegularGraph::transition_partner(int pairing, uint32_t dart) const {
    uint32_t base = dart & ~uint32_t{3};
    return base + kPartnerLocal[pairing][dart & 3];
}

int FourRegularGraph::pairing_joining(uint32_t dart_a, uint32_t dart_b) {
    uint32_t a = dart_a & 3, b = dart_b & 3;
    for (int p = 0; p < 3; ++p)
        if (kPartnerLocal[p][a] == b) return p;
    throw ValidationError("darts do not share a vertex pairing");
}

CircuitPartition trace(const FourRegularGraph& g, const TransitionSystem& ts) {
    std::size_t nd = g.dart_count();
    // sigma(d) = theta(partner(d)): enter through d, leave through the
    // paired dart, arrive at the other end of that edge.
    std::vector<uint32_t> sigma(nd);
    for (uint32_t d = 0; d < nd; ++d)
        sigma[d] = g.theta(g.transition_partner(ts.pairing[FourRegularGraph::vertex_of(d)], d));

    std::vector<int> cycle_of(nd, -1);
    std::vector<std::vector<uint32_t>> cycles;
    for (uint32_t d = 0; d < nd; ++d) {
        if (cycle_of[d] >= 0) continue;
        std::vector<uint32_t> cyc;
        for (uint32_t cur = d; cycle_of[cur] < 0; cur = sigma[cur]) {
            cycle_of[cur] = static_cast<int>(cycles.size());
            cyc.push_back(cur);
        }
        cycles.push_back(std::move(cyc));
    }

    // Each circuit appears as two directional cycles, one per traversal
    // direction; the reverse of a cycle is the cycle through theta of any
    // of its darts. Keep the direction holding the smaller minimal dart.
    CircuitPartition part;
    part.system = ts;
    std::vector<bool> taken(cycles.size(), false);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (taken[c]) continue;
        std::size_t rev = static_cast<std::size_t>(cycle_of[g.theta(cycles[c][0])]);
        if (rev == c) throw ValidationError("self-reverse circuit in dart trace");
        taken[c] = taken[rev] = true;
        part.circuits.push_back(cycles[c][0] < cycles[rev][0] ? cycles[c] : cycles[rev]);
    }
    return part;
}

std::size_t circuit_count(const FourRegularGraph& g, const TransitionSystem& ts) {
    std::size_t nd = g.dart_count();
    std::vector<bool> seen(nd, false);
    std::size_t cycles = 0;
    for (uint32_t d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        ++cycles;
        uint32_t cur = d;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = g.theta(g.transition_partner(ts.pairing[FourRegularGraph::vertex_of(cur)], cur));
        }
    }
    return cycles / 2;
}

void for_each_transition_system(
    const FourRegularGraph& g,
    const std::function<void(const TransitionSystem&, std::size_t)>& fn) {
    std::size_t n = g.order();
    if (n > 13)
        throw SizeCapError("transition enumeration: order " + std::to_string(n) +
                           " exceeds the 3^n cap of 13");
    TransitionSystem ts;
    ts.pairing.assign(n, 0);
    while (true) {
        fn(ts, circuit_count(g, ts));
        std::size_t v = 0;
        while (v < n && ts.pairing[v] == 2) ts.pairing[v++] = 0;
        if (v == n) break;
        ++ts.pairing[v];
    }
}

IntPoly1 martin_undirected(const FourRegularGraph& g) {
    std::size_t k = g.components();
    std::vector<uint64_t> count;
    for_each_transition_system(g, [&](const TransitionSystem&, std::size_t circuits) {
        std::size_t e = circuits - k;
        if (count.size() <= e) count.resize(e + 1, 0);
        ++count[e];
    });
    IntPoly1 out;
    for (std::size_t e = 0; e < count.size(); ++e)
        if (count[e]) out += IntPoly1::shifted_power(static_cast<unsigned>(e), -2) *
                             BigInt(static_cast<unsigned long>(count[e]));
    return out;
}

TwoInTwoOutDigraph TwoInTwoOutDigraph::from_arcs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n) throw InvalidIndexError("arc endpoint out of range");
        ++outdeg[u];
        ++indeg[v];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (outdeg[v] != 2 || indeg[v] != 2)
            throw ValidationError("vertex " + std::to_string(v) + " has outdegree " +
                                  std::to_string(outdeg[v]) + " and indegree " +
                                  std::to_string(indeg[v]) + ", expected 2 and 2");

    TwoInTwoOutDigraph d;
    d.host_ = FourRegularGraph::from_edges(n, arcs);
    // from_edges assigns the first dart of each edge to the tail.
    std::vector<uint32_t> used(n, 0);
    for (auto [u, v] : arcs) {
        uint32_t du = static_cast<uint32_t>(4 * u + used[u]++);
        d.out_mask_ |= uint64_t{1} << du;
        ++used[v];
    }
    return d;
}

std::array<int, 2> TwoInTwoOutDigraph::consistent_pairings(std::size_t v) const {
    std::array<int, 2> out{-1, -1};
    std::size_t found = 0;
    for (int p = 0; p < 3 && found < 2; ++p) {
        bool ok = true;
        for (uint32_t local = 0; local < 4; ++local) {
            uint32_t d = static_cast<uint32_t>(4 * v) + local;
            uint32_t q = static_cast<uint32_t>(4 * v) + kPartnerLocal[p][local];
            if (dart_is_out(d) == dart_is_out(q)) {
                ok = false;
                break;
            }
        }
        if (ok) out[found++] = p;
    }
    if (found != 2) throw ValidationError("vertex lacks two consistent pairings");
    return out;
}

int TwoInTwoOutDigraph::inconsistent_pairing(std::size_t v) const {
    auto cons = consistent_pairings(v);
    return 3 - cons[0] - cons[1];
}

bool TwoInTwoOutDigraph::system_is_consistent(const TransitionSystem& ts) const {
    for (std::size_t v = 0; v < order(); ++v) {
        auto cons = consistent_pairings(v);
        if (ts.pairing[v] != cons[0] && ts.pairing[v] != cons[1]) return false;
    }
    return true;
}

CircuitPartition trace_directed(const TwoInTwoOutDigraph& d, const TransitionSystem& ts) {
    if (!d.system_is_consistent(ts))
        throw ValidationError("transition system not orientation-consistent");
    const FourRegularGraph& g = d.host();
    std::size_t nd = g.dart_count();
    CircuitPartition part;
    part.system = ts;
    std::vector<bool> seen(nd, false);
    for (uint32_t start = 0; start < nd; ++start) {
        if (d.dart_is_out(start) || seen[start]) continue;
        std::vector<uint32_t> cyc;
        uint32_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = g.theta(g.transition_partner(ts.pairing[FourRegularGraph::vertex_of(cur)], cur));
        }
        // Rotate the minimal in-dart to the front.
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
        part.circuits.push_back(std::move(cyc));
    }
    return part;
}

void for_each_directed_system(
    const TwoInTwoOutDigraph& d,
    const std::function<void(const TransitionSystem&, std::size_t)>& fn) {
    std::size_t n = d.order();
    std::vector<std::array<int, 2>> cons(n);
    for (std::size_t v = 0; v < n; ++v) cons[v] = d.consistent_pairings(v);
    uint64_t limit = uint64_t{1} << n;
    TransitionSystem ts;
    ts.pairing.assign(n, 0);
    for (uint64_t bits = 0; bits < limit; ++bits) {
        for (std::size_t v = 0; v < n; ++v) ts.pairing[v] = static_cast<uint8_t>(cons[v][(bits >> v) & 1]);
        fn(ts, trace_directed(d, ts).size());
    }
}

IntPoly1 martin_directed(const TwoInTwoOutDigraph& d) {
    std::size_t k = d.host().components();
    std::vector<uint64_t> count;
    for_each_directed_system(d, [&](const TransitionSystem&, std::size_t circuits) {
        std::size_t e = circuits - k;
        if (count.size() <= e) count.resize(e + 1, 0);
        ++count[e];
    });
    IntPoly1 out;
    for (std::size_t e = 0; e < count.size(); ++e)
        if (count[e]) out += IntPoly1::shifted_power(static_cast<unsigned>(e), -1) *
                             BigInt(static_cast<unsigned long>(count[e]));
    return out;
}

std::vector<TransitionSystem> euler_systems_directed(const TwoInTwoOutDigraph& d) {
    std::size_t k = d.host().components();
    std::vector<TransitionSystem> out;
    for_each_directed_system(d, [&](const TransitionSystem& ts, std::size_t circuits) {
        if (circuits == k) out.push_back(ts);
    });
    return out;
}

std::vector<TransitionSystem> euler_systems_undirected(const FourRegularGraph& g) {
    std::size_t k = g.components();
    std::vector<TransitionSystem> out;
    for_each_transition_system(g, [&](const TransitionSystem& ts, std::size_t circuits) {
        if (circuits == k) out.push_back(ts);
    });
    return out;
}

uint64_t count_euler_circuits_backtracking(const TwoInTwoOutDigraph& d) {
    if (d.host().components() != 1)
        throw ValidationError("Eulerian circuit count requires a connected host");
    const FourRegularGraph& g = d.host();
    std::size_t n = g.order();
    if (n == 0) return 0;
    std::vector<std::array<int, 2>> cons(n);
    for (std::size_t v = 0; v < n; ++v) cons[v] = d.consistent_pairings(v);

    // Fixed starting in-dart; every circuit passes through it exactly once,
    // so walks anchored there count circuits up to rotation.
    uint32_t start = 0;
    while (d.dart_is_out(start)) ++start;

    std::vector<int> chosen(n, -1);
    uint64_t count = 0;
    std::size_t total_arcs = g.edge_count();
    auto walk = [&](auto&& self, uint32_t enter, std::size_t arcs_done) -> void {
        if (enter == start && arcs_done > 0) {
            if (arcs_done == total_arcs) ++count;
            return;
        }
        std::size_t v = FourRegularGraph::vertex_of(enter);
        if (chosen[v] >= 0) {
            uint32_t leave = g.transition_partner(chosen[v], enter);
            self(self, g.theta(leave), arcs_done + 1);
            return;
        }
        for (int option = 0; option < 2; ++option) {
            chosen[v] = cons[v][option];
            uint32_t leave = g.transition_partner(chosen[v], enter);
            self(self, g.theta(leave), arcs_done + 1);
            chosen[v] = -1;
        }
    };
    walk(walk, start, 0);
    return count;
}

std::vector<std::vector<std::size_t>> circuit_words(const FourRegularGraph&,
                                                    const CircuitPartition& part) {
    std::vector<std::vector<std::size_t>> words;
    words.reserve(part.circuits.size());
    for (const auto& cyc : part.circuits) {
        std::vector<std::size_t> word;
        word.reserve(cyc.size());
        for (uint32_t dart : cyc) word.push_back(FourRegularGraph::vertex_of(dart));
        words.push_back(std::move(word));
    }
    return words;
}

namespace {

bool word_pair_interlaced(const std::vector<std::size_t>& word, std::size_t a, std::size_t b) {
    // True when the occurrences read a b a b or b a b a cyclically, i.e.
    // exactly one occurrence of b lies between the two occurrences of a.
    std::size_t a1 = word.size(), a2 = word.size();
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == a) (a1 == word.size() ? a1 : a2) = i;
    int between = 0;
    for (std::size_t i = a1 + 1; i < a2; ++i)
        if (word[i] == b) ++between;
    return between == 1;
}

}  // namespace

Graph interlace_graph(const FourRegularGraph& g, const CircuitPartition& part) {
    if (part.size() != g.components())
        throw ValidationError("interlace graph requires an Eulerian system (one circuit per "
                              "component)");
    auto words = circuit_words(g, part);
    Graph h(g.order());
    for (const auto& word : words) {
        std::vector<std::size_t> verts(word.begin(), word.end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (word_pair_interlaced(word, verts[i], verts[j]))
                    h.add_edge(verts[i], verts[j]);
    }
    return h;
}

bool interlaced(const FourRegularGraph& g, const CircuitPartition& part, std::size_t a,
                std::size_t b) {
    for (const auto& word : circuit_words(g, part)) {
        bool has_a = std::find(word.begin(), word.end(), a) != word.end();
        bool has_b = std::find(word.begin(), word.end(), b) != word.end();
        if (has_a && has_b) return word_pair_interlaced(word, a, b);
    }
    return false;
}

TransitionSystem transpose(const TwoInTwoOutDigraph& d, const TransitionSystem& c,
                           std::size_t a, std::size_t b) {
    CircuitPartition part = trace_directed(d, c);
    if (part.size() != d.host().components())
        throw ValidationError("transposition requires an Eulerian system");
    if (!interlaced(d.host(), part, a, b))
        throw ValidationError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                              " are not interlaced");
    TransitionSystem out = c;
    for (std::size_t v : {a, b}) {
        auto cons = d.consistent_pairings(v);
        out.pairing[v] = static_cast<uint8_t>(out.pairing[v] == cons[0] ? cons[1] : cons[0]);
    }
    if (trace_directed(d, out).size() != d.host().components())
        throw ValidationError("transposition failed to produce an Eulerian system");
    return out;
}

std::pair<std::size_t, std::size_t> cohn_lempel_sides(const FourRegularGraph& g,
                                                      const TransitionSystem& c,
                                                      const TransitionSystem& p) {
    CircuitPartition cpart = trace(g, c);
    if (cpart.size() != g.components())
        throw ValidationError("reference system must be Eulerian");

    // Orientation induced by C: darts on the traced direction are "in".
    std::size_t nd = g.dart_count();
    std::vector<bool> is_in(nd, false);
    for (const auto& cyc : cpart.circuits)
        for (uint32_t dart : cyc) is_in[dart] = true;

    uint64_t y_mask = 0, z_mask = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (p.pairing[v] == c.pairing[v]) continue;  // W
        bool consistent = true;
        for (uint32_t local = 0; local < 4; ++local) {
            uint32_t dv = static_cast<uint32_t>(4 * v) + local;
            uint32_t q = g.transition_partner(p.pairing[v], dv);
            if (is_in[dv] == is_in[q]) {
                consistent = false;
                break;
            }
        }
        if (consistent)
            y_mask |= uint64_t{1} << v;
        else
            z_mask |= uint64_t{1} << v;
    }

    std::size_t lhs = circuit_count(g, p) - g.components();
    Graph h = interlace_graph(g, cpart).loop_complement(z_mask);
    auto [rank, nullity] = h.adjacency_matrix().rank_nullity(y_mask | z_mask);
    (void)rank;
    return {lhs, nullity};
}

std::pair<TwoInTwoOutDigraph, CircuitPartition> digraph_from_word(
    const std::vector<std::size_t>& word) {
    if (word.empty()) throw ValidationError("empty word");
    std::size_t n = *std::max_element(word.begin(), word.end()) + 1;
    std::vector<std::size_t> occurrences(n, 0);
    for (std::size_t v : word) ++occurrences[v];
    for (std::size_t v = 0; v < n; ++v)
        if (occurrences[v] != 2)
            throw ValidationError("vertex " + std::to_string(v) + " occurs " +
                                  std::to_string(occurrences[v]) + " times, expected 2");

    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t i = 0; i < word.size(); ++i)
        arcs.emplace_back(word[i], word[(i + 1) % word.size()]);
    TwoInTwoOutDigraph d = TwoInTwoOutDigraph::from_arcs(n, arcs);

    // Arc i enters word[i+1] through the in-dart created for arc i; the walk
    // leaves through the out-dart created for arc i+1. Recover the pairing
    // each visit uses.
    const std::size_t m = word.size();
    std::vector<uint32_t> used(n, 0);
    std::vector<uint32_t> arc_out(m), arc_in(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto [u, v] = arcs[i];
        arc_out[i] = static_cast<uint32_t>(4 * u + used[u]++);
        arc_in[i] = static_cast<uint32_t>(4 * v + used[v]++);
    }
    TransitionSystem ts;
    ts.pairing.assign(n, 0);
    std::vector<bool> set(n, false);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t v = word[(i + 1) % m];
        uint32_t in_dart = arc_in[i];
        uint32_t out_dart = arc_out[(i + 1) % m];
        int pairing = FourRegularGraph::pairing_joining(in_dart, out_dart);
        if (set[v] && ts.pairing[v] != pairing)
            throw ValidationError("word induces conflicting pairings at vertex " +
                                  std::to_string(v));
        ts.pairing[v] = static_cast<uint8_t>(pairing);
        set[v] = true;
    }
    CircuitPartition part = trace_directed(d, ts);
    if (part.size() != 1) throw ValidationError("word did not induce a single circuit");
    return {d, part};
}

TwoInTwoOutDigraph random_two_in_two_out(SplitMix64& rng, std::size_t n,
                                         bool require_connected) {
    while (true) {
        // Random bijection from out-slots to in-slots.
        std::vector<std::size_t> in_slots;
        for (std::size_t v = 0; v < n; ++v) {
            in_slots.push_back(v);
            in_slots.push_back(v);
        }
        for (std::size_t i = in_slots.size(); i > 1; --i)
            std::swap(in_slots[i - 1], in_slots[rng.below(i)]);
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        std::size_t slot = 0;
        for (std::size_t v = 0; v < n; ++v) {
            arcs.emplace_back(v, in_slots[slot++]);
            arcs.emplace_back(v, in_slots[slot++]);
        }
        TwoInTwoOutDigraph d = TwoInTwoOutDigraph::from_arcs(n, arcs);
        if (!require_connected || d.host().components() == 1) return d;
    }
}

FourRegularGraph random_four_regular(SplitMix64& rng, std::size_t n, bool require_connected) {
    while (true) {
        std::vector<std::size_t> stubs;
        for (std::size_t v = 0; v < n; ++v)
            for (int i = 0; i < 4; ++i) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
            edges.emplace_back(stubs[i], stubs[i + 1]);
        FourRegularGraph g = FourRegularGraph::from_edges(n, edges);
        if (!require_connected || g.components() == 1) return g;
    }
}

}  // namespace interlace
