#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace interlace {

using BigInt = mpz_class;

// Exact integer polynomial in one variable, stored as a sparse map from
// exponent to coefficient. Zero coefficients are never stored.
class IntPoly1 {
public:
    IntPoly1() = default;

    static IntPoly1 constant(BigInt c);
    static IntPoly1 monomial(unsigned k, BigInt c = 1);
    // (x + shift)^k expanded with exact binomial coefficients.
    static IntPoly1 shifted_power(unsigned k, long shift);

    bool is_zero() const { return coeff_.empty(); }
    unsigned degree() const;  // degree of the zero polynomial is 0
    // Exponent of the lowest nonzero term; 0 for the zero polynomial.
    unsigned low_degree() const;
    BigInt coeff(unsigned k) const;
    void add_term(unsigned k, const BigInt& c);

    const std::map<unsigned, BigInt>& terms() const { return coeff_; }

    IntPoly1& operator+=(const IntPoly1& o);
    IntPoly1& operator-=(const IntPoly1& o);
    IntPoly1 operator+(const IntPoly1& o) const;
    IntPoly1 operator-(const IntPoly1& o) const;
    IntPoly1 operator*(const IntPoly1& o) const;
    IntPoly1 operator*(const BigInt& c) const;
    bool operator==(const IntPoly1& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const IntPoly1& o) const { return !(*this == o); }

    BigInt evaluate(const BigInt& x) const;
    // p(x + delta): substitute a shifted argument, exactly.
    IntPoly1 shift_argument(long delta) const;

    // "poly x: c0 c1 ... cd" with dense ascending coefficients.
    std::string to_line() const;
    // Human-friendly rendering such as "x^2 + 2x".
    std::string pretty() const;

private:
    std::map<unsigned, BigInt> coeff_;
};

// Exact integer polynomial in two variables x, y.
class IntPoly2 {
public:
    IntPoly2() = default;

    static IntPoly2 constant(BigInt c);
    static IntPoly2 monomial(unsigned i, unsigned j, BigInt c = 1);
    // (x + sx)^i (y + sy)^j.
    static IntPoly2 shifted_power_xy(unsigned i, long sx, unsigned j, long sy);
    static IntPoly2 from_x(const IntPoly1& p);  // p(x) viewed in x,y
    static IntPoly2 from_y(const IntPoly1& p);  // p(y) viewed in x,y

    bool is_zero() const { return coeff_.empty(); }
    BigInt coeff(unsigned i, unsigned j) const;
    void add_term(unsigned i, unsigned j, const BigInt& c);

    const std::map<std::pair<unsigned, unsigned>, BigInt>& terms() const { return coeff_; }

    IntPoly2& operator+=(const IntPoly2& o);
    IntPoly2 operator+(const IntPoly2& o) const;
    IntPoly2 operator-(const IntPoly2& o) const;
    IntPoly2 operator*(const IntPoly2& o) const;
    IntPoly2 operator*(const BigInt& c) const;
    bool operator==(const IntPoly2& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const IntPoly2& o) const { return !(*this == o); }

    BigInt evaluate(const BigInt& x, const BigInt& y) const;
    IntPoly1 substitute_x(const BigInt& x) const;  // polynomial in y
    IntPoly1 substitute_y(const BigInt& y) const;  // polynomial in x
    IntPoly1 diagonal() const;                     // p(x, x)

    // One "coef i j c" line per nonzero coefficient, (i, j) ascending.
    std::string to_lines() const;
    std::string pretty() const;

private:
    std::map<std::pair<unsigned, unsigned>, BigInt> coeff_;
};

}  // namespace interlace
