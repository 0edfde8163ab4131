#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "intutil.hpp"

namespace quintessa {

// Element of Z[zeta], zeta a primitive 5th root of unity, on the power
// basis 1, zeta, zeta^2, zeta^3 with zeta^4 = -(1 + zeta + zeta^2 + zeta^3).
class CycInt {
public:
    CycInt() = default;
    CycInt(Int c0, Int c1, Int c2, Int c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    explicit CycInt(Int rational) : c_{std::move(rational), 0, 0, 0} {}
    explicit CycInt(int rational) : c_{rational, 0, 0, 0} {}

    static CycInt zeta(int k = 1);  // zeta^k, any integer k
    static CycInt lambda() { return CycInt(1, -1, 0, 0); }  // 1 - zeta

    const Int& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    bool operator==(const CycInt&) const = default;
    // coordinate-lexicographic; used only to pick canonical associates
    bool operator<(const CycInt& o) const { return c_ < o.c_; }

    CycInt operator-() const { return CycInt(-c_[0], -c_[1], -c_[2], -c_[3]); }
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);

    // the automorphism zeta -> zeta^i; i = 1..4 (i mod 5 must be nonzero)
    CycInt galois(int i) const;
    // product of the four conjugates; rational and >= 0, zero only at zero
    Int norm() const;
    // product of the three nontrivial conjugates, so x * conj_product(x) = norm(x)
    CycInt conj_product() const;
    // image in Z/5 under zeta -> 1 (reduction mod the prime lambda), in 0..4
    int eval_at_one() const { return mod5(c_[0] + c_[1] + c_[2] + c_[3]); }

    std::string str() const;  // "c0,c1,c2,c3"
    // parses str() output; also accepts a bare integer as shorthand
    static CycInt parse(const std::string& text);

private:
    std::array<Int, 4> c_{};
};

inline CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
inline CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
inline CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
std::ostream& operator<<(std::ostream& os, const CycInt& x);

struct DivResult {
    CycInt q, r;
};

// Euclidean division: norm(r) < norm(b). Quotient from nearest-integer
// rounding of a * conj_product(b) / norm(b), with a bounded offset search
// (each coordinate in -1..1, lexicographic order, first admissible wins)
// for the rare rounding that lands outside the fundamental domain.
DivResult euclid_div(const CycInt& a, const CycInt& b);

// exact division; errors with invalid_argument if b does not divide a
CycInt div_exact(const CycInt& a, const CycInt& b);

// canonical representative among the ten associates +-zeta^k * x:
// eval_at_one in {1, 2} when nonzero, ties (and the eval = 0 case) broken
// by coordinate-lexicographic order
CycInt normalize_associate(const CycInt& x);

// gcd up to units, returned in normalize_associate form; gcd(0,0) is an error
CycInt gcd(CycInt a, CycInt b);

// lambda-adic valuation; x != 0
int v_lambda(CycInt x);

} // namespace quintessa
