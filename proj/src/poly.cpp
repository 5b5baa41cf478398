#include "interlace/poly.hpp"

#include <sstream>

namespace interlace {

IntPoly1 IntPoly1::constant(BigInt c) {
    IntPoly1 p;
    if (c != 0) p.coeff_[0] = std::move(c);
    return p;
}

IntPoly1 IntPoly1::monomial(unsigned k, BigInt c) {
    IntPoly1 p;
    if (c != 0) p.coeff_[k] = std::move(c);
    return p;
}

IntPoly1 IntPoly1::shifted_power(unsigned k, long shift) {
    IntPoly1 p;
    BigInt binom = 1;
    BigInt s(shift);
    // term i: C(k, i) * shift^(k-i) * x^i
    BigInt spow = 1;
    for (unsigned i = 0; i < k; ++i) spow *= s;
    for (unsigned i = 0; i <= k; ++i) {
        if (spow != 0 || i == k) {
            BigInt c = binom * spow;
            if (c != 0) p.coeff_[i] = c;
        }
        if (i < k) {
            binom *= (k - i);
            binom /= (i + 1);
            if (s != 0) spow /= s;
        }
    }
    if (shift == 0) {  // the loop above collapses to x^k
        p.coeff_.clear();
        p.coeff_[k] = 1;
    }
    return p;
}

unsigned IntPoly1::degree() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

unsigned IntPoly1::low_degree() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }

BigInt IntPoly1::coeff(unsigned k) const {
    auto it = coeff_.find(k);
    return it == coeff_.end() ? BigInt(0) : it->second;
}

void IntPoly1::add_term(unsigned k, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = coeff_[k];
    slot += c;
    if (slot == 0) coeff_.erase(k);
}

IntPoly1& IntPoly1::operator+=(const IntPoly1& o) {
    for (const auto& [k, c] : o.coeff_) add_term(k, c);
    return *this;
}

IntPoly1& IntPoly1::operator-=(const IntPoly1& o) {
    for (const auto& [k, c] : o.coeff_) add_term(k, -c);
    return *this;
}

IntPoly1 IntPoly1::operator+(const IntPoly1& o) const {
    IntPoly1 r = *this;
    r += o;
    return r;
}

IntPoly1 IntPoly1::operator-(const IntPoly1& o) const {
    IntPoly1 r = *this;
    r -= o;
    return r;
}

IntPoly1 IntPoly1::operator*(const IntPoly1& o) const {
    IntPoly1 r;
    for (const auto& [i, a] : coeff_)
        for (const auto& [j, b] : o.coeff_) r.add_term(i + j, a * b);
    return r;
}

IntPoly1 IntPoly1::operator*(const BigInt& c) const {
    IntPoly1 r;
    if (c == 0) return r;
    for (const auto& [k, a] : coeff_) r.coeff_[k] = a * c;
    return r;
}

BigInt IntPoly1::evaluate(const BigInt& x) const {
    // Horner over the sparse ascending map, walked from the top down.
    BigInt acc = 0;
    unsigned prev = 0;
    bool first = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        if (!first)
            for (unsigned e = it->first; e < prev; ++e) acc *= x;
        acc += it->second;
        prev = it->first;
        first = false;
    }
    if (!first)
        for (unsigned e = 0; e < prev; ++e) acc *= x;
    return acc;
}

IntPoly1 IntPoly1::shift_argument(long delta) const {
    IntPoly1 r;
    for (const auto& [k, c] : coeff_) r += shifted_power(k, delta) * c;
    return r;
}

std::string IntPoly1::to_line() const {
    std::ostringstream os;
    os << "poly x:";
    unsigned d = degree();
    for (unsigned k = 0; k <= d; ++k) os << ' ' << coeff(k).get_str();
    return os.str();
}

std::string IntPoly1::pretty() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        BigInt c = it->second;
        unsigned k = it->first;
        if (first) {
            if (c < 0) os << '-', c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1 || k == 0) os << c.get_str();
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

IntPoly2 IntPoly2::constant(BigInt c) {
    IntPoly2 p;
    if (c != 0) p.coeff_[{0, 0}] = std::move(c);
    return p;
}

IntPoly2 IntPoly2::monomial(unsigned i, unsigned j, BigInt c) {
    IntPoly2 p;
    if (c != 0) p.coeff_[{i, j}] = std::move(c);
    return p;
}

IntPoly2 IntPoly2::shifted_power_xy(unsigned i, long sx, unsigned j, long sy) {
    IntPoly1 px = IntPoly1::shifted_power(i, sx);
    IntPoly1 py = IntPoly1::shifted_power(j, sy);
    IntPoly2 r;
    for (const auto& [a, ca] : px.terms())
        for (const auto& [b, cb] : py.terms()) r.add_term(a, b, ca * cb);
    return r;
}

IntPoly2 IntPoly2::from_x(const IntPoly1& p) {
    IntPoly2 r;
    for (const auto& [k, c] : p.terms()) r.coeff_[{k, 0}] = c;
    return r;
}

IntPoly2 IntPoly2::from_y(const IntPoly1& p) {
    IntPoly2 r;
    for (const auto& [k, c] : p.terms()) r.coeff_[{0, k}] = c;
    return r;
}

BigInt IntPoly2::coeff(unsigned i, unsigned j) const {
    auto it = coeff_.find({i, j});
    return it == coeff_.end() ? BigInt(0) : it->second;
}

void IntPoly2::add_term(unsigned i, unsigned j, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = coeff_[{i, j}];
    slot += c;
    if (slot == 0) coeff_.erase({i, j});
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
    for (const auto& [ij, c] : o.coeff_) add_term(ij.first, ij.second, c);
    return *this;
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
    IntPoly2 r = *this;
    r += o;
    return r;
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const {
    IntPoly2 r = *this;
    for (const auto& [ij, c] : o.coeff_) r.add_term(ij.first, ij.second, -c);
    return r;
}

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
    IntPoly2 r;
    for (const auto& [ij, a] : coeff_)
        for (const auto& [kl, b] : o.coeff_)
            r.add_term(ij.first + kl.first, ij.second + kl.second, a * b);
    return r;
}

IntPoly2 IntPoly2::operator*(const BigInt& c) const {
    IntPoly2 r;
    if (c == 0) return r;
    for (const auto& [ij, a] : coeff_) r.coeff_[ij] = a * c;
    return r;
}

BigInt IntPoly2::evaluate(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    for (const auto& [ij, c] : coeff_) {
        BigInt t = c;
        for (unsigned e = 0; e < ij.first; ++e) t *= x;
        for (unsigned e = 0; e < ij.second; ++e) t *= y;
        acc += t;
    }
    return acc;
}

IntPoly1 IntPoly2::substitute_x(const BigInt& x) const {
    IntPoly1 r;
    for (const auto& [ij, c] : coeff_) {
        BigInt t = c;
        for (unsigned e = 0; e < ij.first; ++e) t *= x;
        r.add_term(ij.second, t);
    }
    return r;
}

IntPoly1 IntPoly2::substitute_y(const BigInt& y) const {
    IntPoly1 r;
    for (const auto& [ij, c] : coeff_) {
        BigInt t = c;
        for (unsigned e = 0; e < ij.second; ++e) t *= y;
        r.add_term(ij.first, t);
    }
    return r;
}

IntPoly1 IntPoly2::diagonal() const {
    IntPoly1 r;
    for (const auto& [ij, c] : coeff_) r.add_term(ij.first + ij.second, c);
    return r;
}

std::string IntPoly2::to_lines() const {
    std::ostringstream os;
    for (const auto& [ij, c] : coeff_)
        os << "coef " << ij.first << ' ' << ij.second << ' ' << c.get_str() << '\n';
    return os.str();
}

std::string IntPoly2::pretty() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        BigInt c = it->second;
        auto [i, j] = it->first;
        if (first) {
            if (c < 0) os << '-', c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1 || (i == 0 && j == 0)) os << c.get_str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
        if (j >= 1) os << 'y';
        if (j >= 2) os << '^' << j;
        first = false;
    }
    return os.str();
}

}  // namespace interlace
