#include "interlace/interlace_polys.hpp"

#include <bit>
#include <map>
#include <unordered_map>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

namespace {

constexpr std::size_t kStateSumCap = 26;  // 2^26 subsets is the desk-scale ceiling

void require_statesum_size(std::size_t n, const char* what) {
    if (n > kStateSumCap)
        throw SizeCapError(std::string(what) + ": order " + std::to_string(n) +
                           " exceeds state-sum cap of " + std::to_string(kStateSumCap));
}

// Nullity of the principal submatrix indexed by `mask`, with adjacency rows
// `adj` and diagonal `diag`.
std::size_t nullity_masked(const std::vector<uint64_t>& adj, uint64_t diag, uint64_t mask) {
    uint64_t basis[64];
    std::size_t rank = 0;
    for (uint64_t rest = mask; rest;) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        uint64_t row = adj[v] & mask;
        if ((diag >> v) & 1) row |= uint64_t{1} << v;
        for (std::size_t b = 0; b < rank; ++b) {
            uint64_t lead = basis[b] & (~basis[b] + 1);
            if (row & lead) row ^= basis[b];
        }
        if (row) basis[rank++] = row;
    }
    return static_cast<std::size_t>(std::popcount(mask)) - rank;
}

std::vector<uint64_t> adjacency_rows(const Graph& g) {
    std::vector<uint64_t> rows(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
    return rows;
}

// Lexicographically smallest edge by vertex labels; the returned pair has
// the smaller label first. Edges restricted by `want_unlooped`.
std::optional<std::pair<std::size_t, std::size_t>> smallest_edge(const Graph& g,
                                                                 bool want_unlooped) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    auto label_pair = [&](std::size_t u, std::size_t v) {
        const std::string& lu = g.label(u);
        const std::string& lv = g.label(v);
        return lu <= lv ? std::make_pair(lu, lv) : std::make_pair(lv, lu);
    };
    for (auto [u, v] : g.edges()) {
        if (want_unlooped && (g.looped(u) || g.looped(v))) continue;
        if (!best || label_pair(u, v) < label_pair(best->first, best->second)) {
            if (g.label(u) <= g.label(v))
                best = std::make_pair(u, v);
            else
                best = std::make_pair(v, u);
        }
    }
    return best;
}

std::size_t smallest_looped_vertex(const Graph& g) {
    std::size_t best = g.order();
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.looped(v) && (best == g.order() || g.label(v) < g.label(best))) best = v;
    return best;
}

IntPoly1 q_nullity_rec_impl(const Graph& g, std::map<std::string, IntPoly1>& memo) {
    auto edge = smallest_edge(g, true);
    if (!edge) return IntPoly1::monomial(static_cast<unsigned>(g.order()));
    std::string key = g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto [a, b] = *edge;
    IntPoly1 out = q_nullity_rec_impl(g.delete_vertex(a), memo) +
                   q_nullity_rec_impl(g.pivot(a, b).delete_vertex(b), memo);
    memo.emplace(std::move(key), out);
    return out;
}

IntPoly1 big_q_rec_impl(const Graph& g, std::map<std::string, IntPoly1>& memo) {
    auto edge = smallest_edge(g, true);
    if (!edge) return IntPoly1::monomial(static_cast<unsigned>(g.order()));
    std::string key = g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto [a, b] = *edge;
    IntPoly1 out = big_q_rec_impl(g.delete_vertex(a), memo) +
                   big_q_rec_impl(g.local_complement(a).delete_vertex(a), memo) +
                   big_q_rec_impl(g.pivot(a, b).delete_vertex(b), memo);
    memo.emplace(std::move(key), out);
    return out;
}

IntPoly2 q_twovar_rec_impl(const Graph& g, std::map<std::string, IntPoly2>& memo) {
    auto edge = smallest_edge(g, true);
    std::size_t loop_v = smallest_looped_vertex(g);
    if (!edge && loop_v == g.order())
        return IntPoly2::monomial(0, static_cast<unsigned>(g.order()));
    std::string key = g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPoly2 out;
    if (edge) {
        auto [a, b] = *edge;
        Graph piv = g.pivot(a, b);
        // ((x-1)^2 - 1) = x^2 - 2x
        IntPoly2 factor = IntPoly2::monomial(2, 0) + IntPoly2::monomial(1, 0, -2);
        uint64_t keep = g.full_mask() & ~(uint64_t{1} << a) & ~(uint64_t{1} << b);
        out = q_twovar_rec_impl(g.delete_vertex(a), memo) +
              q_twovar_rec_impl(piv.delete_vertex(b), memo) +
              factor * q_twovar_rec_impl(piv.induced(keep), memo);
    } else {
        std::size_t a = loop_v;
        IntPoly2 xm1 = IntPoly2::monomial(1, 0) + IntPoly2::monomial(0, 0, -1);
        out = q_twovar_rec_impl(g.delete_vertex(a), memo) +
              xm1 * q_twovar_rec_impl(g.local_complement_looped(a).delete_vertex(a), memo);
    }
    memo.emplace(std::move(key), out);
    return out;
}

Gf2Matrix matrix_drop(const Gf2Matrix& a, std::size_t v) { return a.drop(v); }

IntPoly1 q_matrix_rec_impl(const Gf2Matrix& a) {
    std::size_t n = a.dim();
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i)
        if (a.row(i)) zero = false;
    if (zero) return IntPoly1::monomial(static_cast<unsigned>(n));

    // Deterministic invertible principal block: a diagonal 1, otherwise an
    // off-diagonal 1 between two zero-diagonal indices.
    for (std::size_t v = 0; v < n; ++v)
        if (a.get(v, v)) {
            uint64_t t = uint64_t{1} << v;
            return q_matrix_rec_impl(matrix_drop(a, v)) +
                   q_matrix_rec_impl(matrix_drop(a.ppt(t), v));
        }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (a.get(u, v)) {
                uint64_t t = (uint64_t{1} << u) | (uint64_t{1} << v);
                return q_matrix_rec_impl(matrix_drop(a, u)) +
                       q_matrix_rec_impl(matrix_drop(a.ppt(t), u));
            }
    return IntPoly1::monomial(static_cast<unsigned>(n));  // unreachable
}

}  // namespace

IntPoly1 q_nullity_statesum(const Graph& g) {
    std::size_t n = g.order();
    require_statesum_size(n, "q_N state sum");
    std::vector<uint64_t> adj = adjacency_rows(g);
    uint64_t diag = g.loops_mask();
    std::vector<uint64_t> count(n + 1, 0);
    uint64_t limit = g.full_mask();
    for (uint64_t t = 0;; ++t) {
        ++count[nullity_masked(adj, diag, t)];
        if (t == limit) break;
    }
    IntPoly1 out;
    for (std::size_t k = 0; k <= n; ++k)
        if (count[k]) out += IntPoly1::shifted_power(static_cast<unsigned>(k), -1) *
                             BigInt(static_cast<unsigned long>(count[k]));
    return out;
}

IntPoly1 q_nullity_recursive(const Graph& g) {
    if (!g.is_simple())
        throw UnsupportedInputError(
            "one-variable recursion requires a simple graph; use the two-variable "
            "recursion at x = 2 for looped graphs");
    std::map<std::string, IntPoly1> memo;
    return q_nullity_rec_impl(g, memo);
}

IntPoly1 q_nullity_looped(const Graph& g) { return q_twovar_statesum(g).substitute_x(2); }

IntPoly1 Q_statesum(const Graph& g) {
    std::size_t n = g.order();
    require_statesum_size(n, "Q state sum");
    if (n > 20) throw SizeCapError("Q state sum: order " + std::to_string(n) + " exceeds the 3^n cap of 20");
    std::vector<uint64_t> adj = adjacency_rows(g);
    uint64_t diag0 = g.loops_mask();
    std::vector<uint64_t> count(n + 1, 0);
    uint64_t limit = g.full_mask();
    for (uint64_t t = 0;; ++t) {
        // All loop complements S inside T, via submask enumeration.
        uint64_t s = t;
        while (true) {
            ++count[nullity_masked(adj, diag0 ^ s, t)];
            if (s == 0) break;
            s = (s - 1) & t;
        }
        if (t == limit) break;
    }
    IntPoly1 out;
    for (std::size_t k = 0; k <= n; ++k)
        if (count[k]) out += IntPoly1::shifted_power(static_cast<unsigned>(k), -2) *
                             BigInt(static_cast<unsigned long>(count[k]));
    return out;
}

IntPoly1 Q_recursive(const Graph& g) {
    if (!g.is_simple())
        throw UnsupportedInputError("Q recursion requires a simple graph; use the state sum");
    std::map<std::string, IntPoly1> memo;
    return big_q_rec_impl(g, memo);
}

IntPoly2 q_twovar_statesum(const Graph& g) {
    std::size_t n = g.order();
    require_statesum_size(n, "two-variable state sum");
    std::vector<uint64_t> adj = adjacency_rows(g);
    uint64_t diag = g.loops_mask();
    // rank + nullity = |T|, so count by (|T|, nullity).
    std::vector<std::vector<uint64_t>> count(n + 1, std::vector<uint64_t>(n + 1, 0));
    uint64_t limit = g.full_mask();
    for (uint64_t t = 0;; ++t) {
        std::size_t size = static_cast<std::size_t>(std::popcount(t));
        ++count[size][nullity_masked(adj, diag, t)];
        if (t == limit) break;
    }
    IntPoly2 out;
    for (std::size_t size = 0; size <= n; ++size)
        for (std::size_t nul = 0; nul <= size; ++nul)
            if (count[size][nul])
                out += IntPoly2::shifted_power_xy(static_cast<unsigned>(size - nul), -1,
                                                  static_cast<unsigned>(nul), -1) *
                       BigInt(static_cast<unsigned long>(count[size][nul]));
    return out;
}

IntPoly2 q_twovar_recursive(const Graph& g) {
    std::map<std::string, IntPoly2> memo;
    return q_twovar_rec_impl(g, memo);
}

IntPoly1 q_matrix_statesum(const Gf2Matrix& a) {
    std::size_t n = a.dim();
    require_statesum_size(n, "matrix state sum");
    std::vector<uint64_t> count(n + 1, 0);
    uint64_t limit = a.dim() == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    for (uint64_t t = 0;; ++t) {
        ++count[a.rank_nullity(t).second];
        if (t == limit) break;
    }
    IntPoly1 out;
    for (std::size_t k = 0; k <= n; ++k)
        if (count[k]) out += IntPoly1::shifted_power(static_cast<unsigned>(k), -1) *
                             BigInt(static_cast<unsigned long>(count[k]));
    return out;
}

IntPoly1 q_matrix_recursive(const Gf2Matrix& a) { return q_matrix_rec_impl(a); }

namespace {

// Parity of the number of perfect matchings of the induced subgraph on
// `rem`, where vertices in `selfmatch` may be covered by their own loop.
uint8_t pm_parity(const std::vector<uint64_t>& adj, uint64_t selfmatch, uint64_t rem,
                  std::unordered_map<uint64_t, uint8_t>& memo) {
    if (rem == 0) return 1;
    if (auto it = memo.find(rem); it != memo.end()) return it->second;
    std::size_t v = static_cast<std::size_t>(std::countr_zero(rem));
    uint64_t vbit = uint64_t{1} << v;
    uint8_t total = 0;
    for (uint64_t rest = adj[v] & rem; rest;) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        total ^= pm_parity(adj, selfmatch, rem & ~vbit & ~(uint64_t{1} << u), memo);
    }
    if (selfmatch & vbit) total ^= pm_parity(adj, selfmatch, rem & ~vbit, memo);
    memo.emplace(rem, total);
    return total;
}

}  // namespace

uint64_t count_odd_pm_subsets(const Graph& g) {
    require_statesum_size(g.order(), "matching oracle");
    std::vector<uint64_t> adj = adjacency_rows(g);
    uint64_t selfmatch = g.loops_mask();
    std::unordered_map<uint64_t, uint8_t> memo;
    uint64_t count = 0;
    uint64_t limit = g.full_mask();
    for (uint64_t t = 0;; ++t) {
        if (pm_parity(adj, selfmatch, t, memo)) ++count;
        if (t == limit) break;
    }
    return count;
}

uint64_t count_even_subgraphs(const Graph& g) {
    require_statesum_size(g.order(), "even-subgraph oracle");
    std::vector<uint64_t> adj = adjacency_rows(g);
    uint64_t count = 0;
    uint64_t limit = g.full_mask();
    for (uint64_t t = 0;; ++t) {
        bool even = true;
        for (uint64_t rest = t; rest && even;) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            if (std::popcount(adj[v] & t) & 1) even = false;
        }
        if (even) ++count;
        if (t == limit) break;
    }
    return count;
}

uint64_t count_odd_general_pm(const Graph& g) {
    require_statesum_size(g.order(), "general matching oracle");
    std::vector<uint64_t> adj = adjacency_rows(g);
    uint64_t natural = g.loops_mask();
    uint64_t count = 0;
    uint64_t limit = g.full_mask();
    // Memo keyed on (rem, selfmatch & rem); parities of sub-problems are
    // shared across the (T, S) enumeration.
    std::map<std::pair<uint64_t, uint64_t>, uint8_t> memo;
    auto parity = [&](auto&& self, uint64_t rem, uint64_t selfmatch) -> uint8_t {
        if (rem == 0) return 1;
        auto key = std::make_pair(rem, selfmatch & rem);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::size_t v = static_cast<std::size_t>(std::countr_zero(rem));
        uint64_t vbit = uint64_t{1} << v;
        uint8_t total = 0;
        for (uint64_t rest = adj[v] & rem; rest;) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            total ^= self(self, rem & ~vbit & ~(uint64_t{1} << u), selfmatch);
        }
        if (selfmatch & vbit) total ^= self(self, rem & ~vbit, selfmatch);
        memo.emplace(key, total);
        return total;
    };
    for (uint64_t t = 0;; ++t) {
        uint64_t s = t;
        while (true) {
            if (parity(parity, t, natural | s)) ++count;
            if (s == 0) break;
            s = (s - 1) & t;
        }
        if (t == limit) break;
    }
    return count;
}

bool EvaluationReport::all_pass() const {
    bool ok = q1_matches_oracle && q2_is_power_of_two && qm1_closed_form &&
              q3_odd_multiple_of_qm1;
    if (simple)
        ok = ok && q0_is_zero && bigq0_is_zero && bigq3_is_power_of_three &&
             bigq4_matches_oracle && bigq2_matches_oracle;
    return ok;
}

EvaluationReport evaluation_report(const Graph& g, std::string graph_id) {
    EvaluationReport rep;
    rep.graph_id = std::move(graph_id);
    rep.n = g.order();
    rep.simple = g.is_simple();

    IntPoly1 q = q_nullity_statesum(g);
    rep.q_at_m1 = q.evaluate(-1);
    rep.q_at_0 = q.evaluate(0);
    rep.q_at_1 = q.evaluate(1);
    rep.q_at_2 = q.evaluate(2);
    rep.q_at_3 = q.evaluate(3);

    BigInt two_n = 1, three_n = 1;
    for (std::size_t i = 0; i < rep.n; ++i) two_n *= 2, three_n *= 3;

    rep.oracle_odd_pm = count_odd_pm_subsets(g);
    rep.q1_matches_oracle = rep.q_at_1 == BigInt(static_cast<unsigned long>(rep.oracle_odd_pm));
    rep.q2_is_power_of_two = rep.q_at_2 == two_n;
    rep.q0_is_zero = rep.n == 0 || rep.q_at_0 == 0;

    // (-1)^n (-2)^{nullity of G with every loop state flipped}
    Graph flipped = g.loop_complement(g.full_mask());
    std::size_t nul = nullity_masked(adjacency_rows(flipped), flipped.loops_mask(),
                                     flipped.full_mask());
    BigInt closed = 1;
    for (std::size_t i = 0; i < nul; ++i) closed *= -2;
    if (rep.n % 2) closed = -closed;
    rep.qm1_closed_form = rep.q_at_m1 == closed;

    rep.q3_odd_multiple_of_qm1 = rep.q_at_m1 != 0 && rep.q_at_3 % rep.q_at_m1 == 0 &&
                                 mpz_odd_p(BigInt(rep.q_at_3 / rep.q_at_m1).get_mpz_t());

    if (rep.simple) {
        IntPoly1 bigq = Q_statesum(g);
        rep.bigq_at_0 = bigq.evaluate(0);
        rep.bigq_at_2 = bigq.evaluate(2);
        rep.bigq_at_3 = bigq.evaluate(3);
        rep.bigq_at_4 = bigq.evaluate(4);
        rep.oracle_even_subgraphs = count_even_subgraphs(g);
        rep.oracle_odd_general_pm = count_odd_general_pm(g);
        rep.bigq0_is_zero = rep.n == 0 || rep.bigq_at_0 == 0;
        rep.bigq3_is_power_of_three = rep.bigq_at_3 == three_n;
        rep.bigq4_matches_oracle =
            rep.bigq_at_4 ==
            two_n * BigInt(static_cast<unsigned long>(rep.oracle_even_subgraphs));
        rep.bigq2_matches_oracle =
            rep.bigq_at_2 == BigInt(static_cast<unsigned long>(rep.oracle_odd_general_pm));
    }
    return rep;
}

}  // namespace interlace
