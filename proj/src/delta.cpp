#include "interlace/delta.hpp"

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

std::vector<uint64_t> normalized(std::vector<uint64_t> feasible) {
    std::sort(feasible.begin(), feasible.end());
    feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
    return feasible;
}

uint64_t drop_bit(uint64_t mask, std::size_t e) {
    uint64_t low = (uint64_t{1} << e) - 1;
    return (mask & low) | ((mask >> 1) & ~low);
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> ground, std::vector<uint64_t> feasible)
    : ground_(std::move(ground)), feasible_(normalized(std::move(feasible))) {
    if (ground_.size() > 64) throw SizeCapError("ground set exceeds 64 elements");
    for (uint64_t f : feasible_)
        if (f & ~full_mask())
            throw InvalidIndexError("feasible set uses an element outside the ground set");
}

SetSystem SetSystem::with_numbered_ground(std::size_t n, std::vector<uint64_t> feasible) {
    return SetSystem(numbered_labels(n), std::move(feasible));
}

std::size_t SetSystem::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == label) return i;
    throw InvalidIndexError("unknown element '" + label + "'");
}

uint64_t SetSystem::full_mask() const {
    return ground_.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << ground_.size()) - 1;
}

bool SetSystem::is_feasible(uint64_t set) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), set);
}

bool SetSystem::is_coloop(std::size_t e) const {
    uint64_t bit = uint64_t{1} << e;
    for (uint64_t f : feasible_)
        if (!(f & bit)) return false;
    return true;
}

bool SetSystem::is_loop(std::size_t e) const {
    uint64_t bit = uint64_t{1} << e;
    for (uint64_t f : feasible_)
        if (f & bit) return false;
    return true;
}

SetSystem SetSystem::delete_elem(std::size_t e) const {
    if (e >= ground_size()) throw InvalidIndexError("element index out of range");
    if (is_coloop(e)) return contract(e);
    std::vector<std::string> ground = ground_;
    ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(e));
    uint64_t bit = uint64_t{1} << e;
    std::vector<uint64_t> fam;
    for (uint64_t f : feasible_)
        if (!(f & bit)) fam.push_back(drop_bit(f, e));
    return SetSystem(std::move(ground), std::move(fam));
}

SetSystem SetSystem::contract(std::size_t e) const {
    if (e >= ground_size()) throw InvalidIndexError("element index out of range");
    uint64_t bit = uint64_t{1} << e;
    std::vector<std::string> ground = ground_;
    ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(e));
    std::vector<uint64_t> fam;
    if (is_loop(e)) {  // fallback M/e = M minus e
        for (uint64_t f : feasible_) fam.push_back(drop_bit(f, e));
        return SetSystem(std::move(ground), std::move(fam));
    }
    for (uint64_t f : feasible_)
        if (f & bit) fam.push_back(drop_bit(f, e));
    return SetSystem(std::move(ground), std::move(fam));
}

SetSystem SetSystem::twist(uint64_t x) const {
    if (x & ~full_mask()) throw InvalidIndexError("twist set outside the ground set");
    std::vector<uint64_t> fam;
    fam.reserve(feasible_.size());
    for (uint64_t f : feasible_) fam.push_back(f ^ x);
    return SetSystem(ground_, std::move(fam));
}

SetSystem SetSystem::loop_complement(std::size_t e) const {
    if (e >= ground_size()) throw InvalidIndexError("element index out of range");
    uint64_t bit = uint64_t{1} << e;
    std::set<uint64_t> fam(feasible_.begin(), feasible_.end());
    for (uint64_t f : feasible_) {
        if (f & bit) continue;
        uint64_t toggled = f | bit;
        auto it = fam.find(toggled);
        if (it != fam.end())
            fam.erase(it);
        else
            fam.insert(toggled);
    }
    return SetSystem(ground_, std::vector<uint64_t>(fam.begin(), fam.end()));
}

SetSystem SetSystem::loop_complement_set(uint64_t x) const {
    SetSystem s = *this;
    for (uint64_t rest = x; rest;) {
        std::size_t e = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        s = s.loop_complement(e);
    }
    return s;
}

SetSystem SetSystem::dual_pivot(std::size_t e) const {
    uint64_t bit = uint64_t{1} << e;
    return twist(bit).loop_complement(e).twist(bit);
}

SetSystem SetSystem::dual_pivot_set(uint64_t x) const {
    SetSystem s = *this;
    for (uint64_t rest = x; rest;) {
        std::size_t e = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        s = s.dual_pivot(e);
    }
    return s;
}

std::size_t SetSystem::distance(uint64_t x) const {
    if (feasible_.empty()) throw EmptyFamilyError("distance undefined: no feasible sets");
    std::size_t best = 64;
    for (uint64_t f : feasible_)
        best = std::min(best, static_cast<std::size_t>(std::popcount(f ^ x)));
    return best;
}

bool SetSystem::operator==(const SetSystem& o) const {
    return ground_ == o.ground_ && feasible_ == o.feasible_;
}

SetSystem apply_op(const SetSystem& s, const SetSystemOp& op) {
    return std::visit(
        [&](const auto& o) -> SetSystem {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OpDelete>) return s.delete_elem(o.e);
            else if constexpr (std::is_same_v<T, OpContract>) return s.contract(o.e);
            else if constexpr (std::is_same_v<T, OpTwist>) return s.twist(o.x);
            else if constexpr (std::is_same_v<T, OpLoopComplement>)
                return s.loop_complement_set(o.x);
            else return s.dual_pivot(o.e);
        },
        op);
}

bool symmetric_exchange_check(const SetSystem& s) {
    const auto& fam = s.feasible();
    for (uint64_t x : fam)
        for (uint64_t y : fam) {
            uint64_t diff = x ^ y;
            for (uint64_t urest = diff; urest;) {
                uint64_t ubit = urest & (~urest + 1);
                urest &= urest - 1;
                bool found = false;
                for (uint64_t vrest = diff; vrest && !found;) {
                    uint64_t vbit = vrest & (~vrest + 1);
                    vrest &= vrest - 1;
                    // v = u is allowed: {u,v} collapses to the single
                    // element u.
                    uint64_t candidate = vbit == ubit ? (x ^ ubit) : (x ^ ubit ^ vbit);
                    if (s.is_feasible(candidate)) found = true;
                }
                if (!found) return false;
            }
        }
    return true;
}

bool is_matroid_bases(const SetSystem& s) {
    const auto& fam = s.feasible();
    if (fam.empty()) return false;
    int size = std::popcount(fam.front());
    for (uint64_t f : fam)
        if (std::popcount(f) != size) return false;
    return symmetric_exchange_check(s);
}

SetSystem adjacency_delta_matroid(const Graph& g) {
    Gf2Matrix a = g.adjacency_matrix();
    std::vector<uint64_t> fam;
    uint64_t limit = g.full_mask();
    for (uint64_t x = 0;; ++x) {
        if (a.rank_nullity(x).second == 0) fam.push_back(x);
        if (x == limit) break;
    }
    return SetSystem(g.labels(), std::move(fam));
}

IntPoly1 q_delta(const SetSystem& s) {
    if (s.feasible().empty()) throw EmptyFamilyError("interlace polynomial needs feasible sets");
    std::size_t n = s.ground_size();
    std::vector<uint64_t> count(n + 1, 0);
    uint64_t limit = s.full_mask();
    for (uint64_t x = 0;; ++x) {
        ++count[s.distance(x)];
        if (x == limit) break;
    }
    IntPoly1 out;
    for (std::size_t d = 0; d <= n; ++d)
        if (count[d])
            out.add_term(static_cast<unsigned>(d), BigInt(static_cast<unsigned long>(count[d])));
    return out;
}

IntPoly1 q_delta_recursive(const SetSystem& s) {
    if (s.feasible().empty()) throw EmptyFamilyError("interlace polynomial needs feasible sets");
    for (std::size_t e = 0; e < s.ground_size(); ++e)
        if (!s.is_loop(e) && !s.is_coloop(e)) {
            uint64_t bit = uint64_t{1} << e;
            return q_delta_recursive(s.delete_elem(e)) +
                   q_delta_recursive(s.twist(bit).delete_elem(e));
        }
    // Every element is a loop or a coloop: the single feasible set is the
    // coloop set, and the distance sum collapses to (x+1)^{|E|}.
    return IntPoly1::shifted_power(static_cast<unsigned>(s.ground_size()), 1);
}

IntPoly1 q_delta_global(const SetSystem& s) {
    std::size_t n = s.ground_size();
    if (n > 20) throw SizeCapError("global interlace polynomial: ground size " + std::to_string(n) + " exceeds the 3^n cap of 20");
    std::vector<uint64_t> count(n + 1, 0);
    uint64_t full = s.full_mask();
    for (uint64_t z = 0;; ++z) {
        SetSystem plus = s.loop_complement_set(z);
        if (plus.feasible().empty()) {
            std::string name;
            for (std::size_t e = 0; e < n; ++e)
                if ((z >> e) & 1) name += (name.empty() ? "" : ",") + s.ground()[e];
            throw UndefinedDistanceError("loop complement at {" + name +
                                         "} leaves no feasible sets");
        }
        uint64_t rest_bits = full & ~z;
        uint64_t sub = rest_bits;
        while (true) {  // X = Z union sub over submasks of the complement
            ++count[plus.distance(z | sub)];
            if (sub == 0) break;
            sub = (sub - 1) & rest_bits;
        }
        if (z == full) break;
    }
    IntPoly1 out;
    for (std::size_t d = 0; d <= n; ++d)
        if (count[d])
            out.add_term(static_cast<unsigned>(d), BigInt(static_cast<unsigned long>(count[d])));
    return out;
}

IntPoly2 q_bar(const SetSystem& s) {
    if (s.feasible().empty()) throw EmptyFamilyError("two-variable polynomial needs feasible sets");
    IntPoly2 out;
    uint64_t limit = s.full_mask();
    for (uint64_t x = 0;; ++x) {
        out.add_term(static_cast<unsigned>(std::popcount(x)),
                     static_cast<unsigned>(s.distance(x)), 1);
        if (x == limit) break;
    }
    return out;
}

IntPoly2 q_bar_printed(const SetSystem& s) {
    if (s.feasible().empty()) throw EmptyFamilyError("two-variable polynomial needs feasible sets");
    std::size_t n = s.ground_size();
    std::vector<std::vector<uint64_t>> count(n + 1, std::vector<uint64_t>(n + 1, 0));
    uint64_t limit = s.full_mask();
    for (uint64_t x = 0;; ++x) {
        ++count[static_cast<std::size_t>(std::popcount(x))][s.distance(x)];
        if (x == limit) break;
    }
    IntPoly2 out;
    for (std::size_t sz = 0; sz <= n; ++sz)
        for (std::size_t d = 0; d <= n; ++d)
            if (count[sz][d])
                out += IntPoly2::shifted_power_xy(static_cast<unsigned>(sz), 0,
                                                  static_cast<unsigned>(d), -1) *
                       BigInt(static_cast<unsigned long>(count[sz][d]));
    return out;
}

namespace {

IntPoly2 tutte_matroid_rec(const SetSystem& s) {
    for (std::size_t e = 0; e < s.ground_size(); ++e)
        if (!s.is_loop(e) && !s.is_coloop(e))
            return tutte_matroid_rec(s.contract(e)) + tutte_matroid_rec(s.delete_elem(e));
    std::size_t coloops = 0, loops = 0;
    for (std::size_t e = 0; e < s.ground_size(); ++e)
        (s.is_coloop(e) ? coloops : loops) += 1;
    return IntPoly2::monomial(static_cast<unsigned>(coloops), static_cast<unsigned>(loops));
}

}  // namespace

IntPoly2 tutte_matroid(const SetSystem& s) {
    if (!is_matroid_bases(s))
        throw NotAMatroidError("feasible sets are not the bases of a matroid");
    return tutte_matroid_rec(s);
}

SetSystem uniform_matroid(std::size_t k, std::size_t m) {
    std::vector<uint64_t> fam;
    uint64_t limit = m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    for (uint64_t x = 0;; ++x) {
        if (static_cast<std::size_t>(std::popcount(x)) == k) fam.push_back(x);
        if (x == limit) break;
    }
    return SetSystem::with_numbered_ground(m, std::move(fam));
}

VfSafety vf_safe(const SetSystem& s, bool known_binary, std::size_t ground_cap) {
    if (known_binary) return VfSafety::Safe;
    if (s.ground_size() > ground_cap) return VfSafety::Unknown;
    // Orbit of the per-element S3 action generated by twists and loop
    // complements; at most 6^|E| states.
    std::set<std::vector<uint64_t>> seen{s.feasible()};
    std::vector<SetSystem> frontier{s};
    while (!frontier.empty()) {
        SetSystem cur = std::move(frontier.back());
        frontier.pop_back();
        if (!symmetric_exchange_check(cur)) return VfSafety::Unsafe;
        for (std::size_t e = 0; e < s.ground_size(); ++e) {
            for (int op = 0; op < 2; ++op) {
                SetSystem next =
                    op == 0 ? cur.twist(uint64_t{1} << e) : cur.loop_complement(e);
                if (seen.insert(next.feasible()).second) frontier.push_back(std::move(next));
            }
        }
    }
    return VfSafety::Safe;
}

DualPivotEvaluation dual_pivot_evaluation(const SetSystem& s) {
    DualPivotEvaluation out;
    SetSystem pivoted = s.dual_pivot_set(s.full_mask());
    out.d_empty = pivoted.distance(0);
    out.lhs = q_delta(s).evaluate(-2);
    BigInt rhs = 1;
    for (std::size_t i = 0; i < out.d_empty; ++i) rhs *= -2;
    if (s.ground_size() % 2) rhs = -rhs;
    out.rhs = rhs;
    out.identity_holds = out.lhs == out.rhs;
    return out;
}

}  // namespace interlace
