#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "splitting.hpp"

namespace quintessa {

// Residue field O/prime presented as F_p[x]/(modulus), modulus monic of
// degree f. The image of zeta is a root of the factor of x^4+x^3+x^2+x+1
// annihilated by the prime's generator, so reduction O -> F_{p^f} is
// evaluation of coordinates at that image.
class ResidueField {
public:
    using Elt = std::array<uint64_t, 4>;  // poly coeffs, degree < f

    explicit ResidueField(const PrimeK0& prime);

    uint64_t p() const { return p_; }
    int f() const { return f_; }
    const Int& unit_group_order() const { return order_; }  // p^f - 1

    Elt zero() const { return {0, 0, 0, 0}; }
    Elt one() const { return {1 % p_, 0, 0, 0}; }
    Elt zeta_image() const { return zeta_; }
    bool is_zero(const Elt& a) const { return a == Elt{0, 0, 0, 0}; }

    Elt reduce(const CycInt& alpha) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, Int e) const;

    // Euler criterion: j in 0..4 with a^((p^f-1)/5) = zeta_image^j;
    // a must be nonzero
    int euler_index(const Elt& a) const;

private:
    uint64_t p_;
    int f_;
    Int order_;
    Elt zeta_{};
    std::array<uint64_t, 4> xf_{};       // x^f reduced, as degree < f poly
    std::array<Elt, 5> zeta_pow_{};
};

// memoized per-prime residue field
const ResidueField& residue_field_for(const PrimeK0& prime);

// quintic power residue symbol exponent: the j in 0..4 with
// alpha^((N(prime)-1)/5) = zeta^j (mod prime). Errors: not_coprime when
// prime divides alpha; unsupported at lambda (N(lambda) - 1 = 4).
int power_residue_symbol(const CycInt& alpha, const PrimeK0& prime);

struct SymbolPart {
    PrimeK0 prime;
    int j = 0;
};

struct RationalSymbolReport {
    uint64_t p = 0;
    std::vector<SymbolPart> parts;  // one per prime over p
    int product = 0;                // sum of exponents mod 5
};

// symbol of alpha at every prime over p (p != 5); not_coprime propagates
RationalSymbolReport symbol_at_rational_prime(const CycInt& alpha, uint64_t p);

// norm residue exponent at an unramified place of k0(alpha^(1/5))/k0:
// -v_prime(beta) * (symbol of the prime-free part of alpha) mod 5.
// Unsupported at lambda or when v_prime(alpha) is not 0 mod 5.
int norm_residue_unramified(const CycInt& beta, const CycInt& alpha, const PrimeK0& prime);

// symbol identities at the conjugate prime pair over p = -1 (mod 5):
// doubling ((c/pi1) = (c/pi2)^2 for rational c) and cross-triviality
// ((pi2/pi1) = (pi1/pi2) = zeta^0)
struct ConjugatePairReport {
    uint64_t p = 0;
    Int c;
    CycInt pi1, pi2;
    int j1 = 0, j2 = 0;    // exponents of c at pi1, pi2
    int j12 = 0, j21 = 0;  // (pi2/pi1), (pi1/pi2)
    bool doubling_holds = false;
    bool cross_trivial = false;
    bool c_trivial = false;  // j1 = j2 = 0
};

ConjugatePairReport conjugate_symbol_identities(uint64_t p, const Int& c);

} // namespace quintessa
